#include "dirichlet/weights.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "dirichlet/expr.hpp"

namespace dirichlet {

namespace detail {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

namespace {

// Renders t^e as a DSL fragment; negative exponents use division since the
// grammar has no unary minus.
std::string power_fragment(const std::string& base, double e, bool base_is_atom) {
    const std::string b = base_is_atom ? base : "(" + base + ")";
    if (e == 0.0) return "1";
    if (e == 1.0) return b;
    return b + "^" + detail::format_number(std::fabs(e));
}

std::string render_power(double alpha) {
    if (alpha == 0.0) return "1";
    if (alpha > 0.0) return power_fragment("t", alpha, true);
    return "1/" + power_fragment("t", alpha, true);
}

std::string render_two_exponent(double a0, double a1) {
    const double d = a1 - a0;
    std::string num, den;
    auto emit = [](std::string& dst, const std::string& frag) {
        if (!dst.empty()) dst += "*";
        dst += frag;
    };
    if (a0 > 0.0) emit(num, power_fragment("t", a0, true));
    if (a0 < 0.0) emit(den, power_fragment("t", a0, true));
    if (d > 0.0) emit(num, power_fragment("1+t", d, false));
    if (d < 0.0) emit(den, power_fragment("1+t", d, false));
    if (num.empty()) num = "1";
    if (den.empty()) return num;
    return num + "/" + den;
}

}  // namespace

WeightProfile parse_weight(const std::string& text) {
    expr::Expression e = expr::Expression::parse(text);
    // Positivity probe: geometric grid over 1e-8..1e8, 200 points.
    const int n = 200;
    for (int i = 0; i < n; ++i) {
        const double t = 1e-8 * std::pow(1e16, static_cast<double>(i) / (n - 1));
        const double v = e(t);
        if (!std::isfinite(v) || v <= 0.0) {
            std::ostringstream msg;
            msg << "weight expression '" << text << "' is not positive at t="
                << detail::format_number(t) << " (value " << v << ")";
            throw Error(msg.str());
        }
    }
    WeightProfile w;
    w.evaluator = [e](double t) { return e(t); };
    w.label = text;
    w.dsl = text;
    return w;
}

WeightProfile make_power(double alpha) {
    WeightProfile w;
    w.evaluator = [alpha](double t) { return std::pow(t, alpha); };
    w.endpoint_hints = std::make_pair(alpha, alpha);
    w.label = "t^" + detail::format_number(alpha);
    w.dsl = render_power(alpha);

    SigmaClosedForm cf;
    cf.antiderivative = [alpha](double p, double t) {
        const double beta = alpha / (p - 1.0);
        if (beta == 1.0) return std::log(t);
        return std::pow(t, 1.0 - beta) / (1.0 - beta);
    };
    cf.limit_at_zero = [alpha](double p) {
        const double beta = alpha / (p - 1.0);
        return beta < 1.0 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
    };
    cf.limit_at_infinity = [alpha](double p) {
        const double beta = alpha / (p - 1.0);
        return beta > 1.0 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
    };
    w.sigma = std::move(cf);
    return w;
}

WeightProfile make_two_exponent(double a0, double a1) {
    WeightProfile w;
    w.evaluator = [a0, a1](double t) {
        return std::pow(t, a0) * std::pow(1.0 + t, a1 - a0);
    };
    w.endpoint_hints = std::make_pair(a0, a1);
    w.label = "t^" + detail::format_number(a0) + "*(1+t)^" +
              detail::format_number(a1 - a0);
    w.dsl = render_two_exponent(a0, a1);
    return w;
}

double dual_density(const WeightProfile& w, double p, double t) {
    if (!(t > 0.0))
        throw PreconditionError("dual_density requires t > 0");
    const double wt = w.evaluator(t);
    if (!std::isfinite(wt) || wt <= 0.0) {
        std::ostringstream msg;
        msg << "weight underflow at t=" << detail::format_number(t)
            << " (omega=" << wt << ")";
        throw Error(msg.str());
    }
    const double s = std::pow(wt, -1.0 / (p - 1.0));
    if (!std::isfinite(s)) {
        std::ostringstream msg;
        msg << "weight underflow at t=" << detail::format_number(t)
            << " (sigma overflowed)";
        throw Error(msg.str());
    }
    return s;
}

std::pair<WeightProfile, double> interpolate_weights(const WeightProfile& w0, double p0,
                                                     const WeightProfile& w1, double p1,
                                                     double theta) {
    if (!(theta >= 0.0 && theta <= 1.0))
        throw PreconditionError("interpolate_weights requires theta in [0,1]");
    if (!(p0 > 1.0) || !(p1 > 1.0))
        throw PreconditionError("interpolate_weights requires p0, p1 > 1");

    const double p_theta = 1.0 / ((1.0 - theta) / p0 + theta / p1);
    const double e0 = (1.0 - theta) / p0;
    const double e1 = theta / p1;

    WeightProfile w;
    auto f0 = w0.evaluator;
    auto f1 = w1.evaluator;
    w.evaluator = [f0, f1, e0, e1, p_theta](double t) {
        return std::pow(std::pow(f0(t), e0) * std::pow(f1(t), e1), p_theta);
    };
    if (w0.endpoint_hints && w1.endpoint_hints) {
        w.endpoint_hints = std::make_pair(
            p_theta * (e0 * w0.endpoint_hints->first + e1 * w1.endpoint_hints->first),
            p_theta * (e0 * w0.endpoint_hints->second + e1 * w1.endpoint_hints->second));
    }
    w.label = "interp(" + w0.label + "," + w1.label + ";theta=" +
              detail::format_number(theta) + ")";
    if (w0.dsl && w1.dsl) {
        w.dsl = "((" + *w0.dsl + ")^" + detail::format_number(e0) + "*(" + *w1.dsl +
                ")^" + detail::format_number(e1) + ")^" + detail::format_number(p_theta);
    }
    return {std::move(w), p_theta};
}

}  // namespace dirichlet
