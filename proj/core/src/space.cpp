#include "dirichlet/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace dirichlet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxTraceProbes = 60;

double pth_root(double x, double p) { return std::pow(x, 1.0 / p); }

// |v(t)|^p * omega(t), the seminorm integrand.
quad::Integrand energy_integrand(const DirichletFunction& u, const WeightProfile& w,
                                 double p) {
    auto v = u.derivative;
    auto omega = w.evaluator;
    return [v, omega, p](double t) {
        const double d = v(t);
        if (d == 0.0) return 0.0;
        return std::pow(std::fabs(d), p) * omega(t);
    };
}

quad::Integrand sigma_integrand(const WeightProfile& w, double p) {
    return [&w, p](double t) { return dual_density(w, p, t); };
}

// integral of sigma over (0, t], via the closed form when available.
double sigma_mass_from_zero(const WeightProfile& w, double p, double t, double tol) {
    if (w.sigma) {
        const double l0 = w.sigma->limit_at_zero(p);
        if (std::isfinite(l0)) return w.sigma->antiderivative(p, t) - l0;
    }
    auto out = quad::improper_to_zero(sigma_integrand(w, p), t, tol);
    if (out.verdict != quad::Verdict::Converged)
        throw Error("integral of the dual density over (0, t] did not converge");
    return out.value;
}

// integral of sigma over [t, infinity).
double sigma_mass_to_infinity(const WeightProfile& w, double p, double t, double tol) {
    if (w.sigma) {
        const double linf = w.sigma->limit_at_infinity(p);
        if (std::isfinite(linf)) return linf - w.sigma->antiderivative(p, t);
    }
    auto out = quad::improper_to_infinity(sigma_integrand(w, p), t, tol);
    if (out.verdict != quad::Verdict::Converged)
        throw Error("integral of the dual density over [t, inf) did not converge");
    return out.value;
}

void require_bp_zero(const WeightProfile& w, double p, const char* what) {
    if (bp_zero(w, p).member != Membership::Yes) {
        std::ostringstream msg;
        msg << what << " undefined: weight is not B_p(0) (dual density not "
            << "integrable near 0)";
        throw PreconditionError(msg.str());
    }
}

void require_bp_infinity(const WeightProfile& w, double p, const char* what) {
    if (bp_infinity(w, p).member != Membership::Yes) {
        std::ostringstream msg;
        msg << what << " undefined: weight is not B_p(infinity) (dual density "
            << "not integrable near infinity)";
        throw PreconditionError(msg.str());
    }
}

// Tail energy (integral of |v|^p omega toward the endpoint from `probe`)^(1/p).
double tail_energy(const DirichletFunction& u, const WeightProfile& w, double p,
                   Side side, double probe, double tol) {
    auto g = energy_integrand(u, w, p);
    // Clip to the derivative support when it keeps the tail trivially zero.
    if (u.derivative_support) {
        const auto [lo, hi] = *u.derivative_support;
        if (side == Side::Zero && probe <= lo) return 0.0;
        if (side == Side::Infinity && probe >= hi) return 0.0;
    }
    auto out = side == Side::Zero ? quad::improper_to_zero(g, probe, tol)
                                  : quad::improper_to_infinity(g, probe, tol);
    if (out.verdict == quad::Verdict::Diverged)
        throw PreconditionError("trace bound unavailable: the energy integral diverges");
    if (out.verdict == quad::Verdict::Inconclusive)
        throw Error("trace bound unavailable: the tail energy integral is inconclusive");
    return pth_root(std::max(out.value, 0.0), p);
}

TraceResult trace_impl(const DirichletFunction& u, const WeightProfile& w, double p,
                       Side side, double tol) {
    if (!(tol > 0.0)) throw PreconditionError("trace tolerance must be positive");
    if (side == Side::Zero)
        require_bp_zero(w, p, "trace at 0");
    else
        require_bp_infinity(w, p, "trace at infinity");

    const double quad_tol = 1e-10;
    TraceResult best;
    best.side = side;
    best.certified_error = kInf;

    for (int k = 1; k <= kMaxTraceProbes; ++k) {
        const double probe = side == Side::Zero ? u.anchor * std::pow(2.0, -k)
                                                : u.anchor * std::pow(2.0, k);
        if (probe <= 0.0 || !std::isfinite(probe)) break;
        const double energy = tail_energy(u, w, p, side, probe, quad_tol);
        const double modulus = side == Side::Zero ? omega0(w, p, probe)
                                                  : omega_inf(w, p, probe);
        const double bound = energy * modulus;
        if (bound < best.certified_error) {
            best.certified_error = bound;
            best.probe = probe;
        }
        if (bound <= tol) {
            best.value = u.value_at(probe, quad_tol);
            best.certified_error = bound;
            best.probe = probe;
            best.converged = true;
            return best;
        }
    }
    best.value = u.value_at(best.probe, quad_tol);
    best.converged = false;
    return best;
}

}  // namespace

double DirichletFunction::value_at(double t, double tol) const {
    if (!(t > 0.0)) throw PreconditionError("DirichletFunction is defined on (0, infinity)");
    double lo = std::min(anchor, t);
    double hi = std::max(anchor, t);
    if (derivative_support) {
        lo = std::max(lo, derivative_support->first);
        hi = std::min(hi, derivative_support->second);
    }
    double integral = 0.0;
    if (lo < hi) integral = quad::integrate(derivative, lo, hi, tol).value;
    return t >= anchor ? anchor_value + integral : anchor_value - integral;
}

double omega0(const WeightProfile& w, double p, double t) {
    if (!(t > 0.0)) throw PreconditionError("omega0 requires t > 0");
    require_bp_zero(w, p, "Omega");
    const double mass = sigma_mass_from_zero(w, p, t, 1e-10);
    return std::pow(mass, 1.0 - 1.0 / p);
}

double omega_inf(const WeightProfile& w, double p, double t) {
    if (!(t > 0.0)) throw PreconditionError("omega_inf requires t > 0");
    require_bp_infinity(w, p, "Omega");
    const double mass = sigma_mass_to_infinity(w, p, t, 1e-10);
    return std::pow(mass, 1.0 - 1.0 / p);
}

double seminorm(const DirichletFunction& u, const WeightProfile& w, double p) {
    const double tol = 1e-10;
    auto g = energy_integrand(u, w, p);

    // Split (0, inf) = (0, s0] + [s0, s1] + [s1, inf) around the anchor.
    const double s0 = std::min(0.5, u.anchor * 0.5);
    const double s1 = std::max(2.0, u.anchor * 2.0);

    auto head = quad::improper_to_zero(g, s0, tol);
    if (head.verdict == quad::Verdict::Diverged) return kInf;
    if (head.verdict == quad::Verdict::Inconclusive)
        throw Error("seminorm undetermined: head integral inconclusive");
    auto mid = quad::integrate(g, s0, s1, tol);
    auto tail = quad::improper_to_infinity(g, s1, tol);
    if (tail.verdict == quad::Verdict::Diverged) return kInf;
    if (tail.verdict == quad::Verdict::Inconclusive)
        throw Error("seminorm undetermined: tail integral inconclusive");

    return pth_root(std::max(head.value + mid.value + tail.value, 0.0), p);
}

double norm_at(const DirichletFunction& u, const WeightProfile& w, double p,
               NormAnchor anchor, double trace_tol) {
    const double semi = seminorm(u, w, p);
    if (std::holds_alternative<double>(anchor)) {
        const double a = std::get<double>(anchor);
        if (!(a > 0.0)) throw PreconditionError("norm anchor must be positive");
        return semi + std::fabs(u.value_at(a));
    }
    const Side side = std::get<Side>(anchor);
    const TraceResult tr = side == Side::Zero ? trace_zero(u, w, p, trace_tol)
                                              : trace_infinity(u, w, p, trace_tol);
    return semi + std::fabs(tr.value);
}

TraceResult trace_zero(const DirichletFunction& u, const WeightProfile& w, double p,
                       double tol) {
    return trace_impl(u, w, p, Side::Zero, tol);
}

TraceResult trace_infinity(const DirichletFunction& u, const WeightProfile& w, double p,
                           double tol) {
    return trace_impl(u, w, p, Side::Infinity, tol);
}

EquivalenceConstant equivalence_constant(const WeightProfile& w, double p, double a,
                                         double b) {
    if (!(b > a) || !(a >= 0.0))
        throw PreconditionError("equivalence_constant requires 0 <= a < b");
    double mass;
    if (a == 0.0) {
        require_bp_zero(w, p, "equivalence constant over (0, b)");
        mass = sigma_mass_from_zero(w, p, b, 1e-10);
    } else {
        mass = quad::integrate(sigma_integrand(w, p), a, b, 1e-10).value;
    }
    EquivalenceConstant ec;
    ec.c = std::pow(mass, 1.0 - 1.0 / p);
    ec.factor = 1.0 + ec.c;
    return ec;
}

double asymptotic_residual(const DirichletFunction& u, const WeightProfile& w, double p,
                           Side side, double t) {
    if (!(t > 0.0)) throw PreconditionError("asymptotic_residual requires t > 0");
    const TraceResult tr = side == Side::Zero ? trace_zero(u, w, p, 1e-8)
                                              : trace_infinity(u, w, p, 1e-8);
    const double modulus = side == Side::Zero ? omega0(w, p, t) : omega_inf(w, p, t);
    if (!(modulus > 0.0) || !std::isfinite(modulus)) {
        std::ostringstream msg;
        msg << "asymptotic residual undefined at degenerate probe t="
            << detail::format_number(t) << " (Omega=" << modulus << ")";
        throw Error(msg.str());
    }
    return (u.value_at(t) - tr.value) / modulus;
}

double residual_sup(const DirichletFunction& u, const WeightProfile& w, double p,
                    Side side) {
    const TraceResult tr = side == Side::Zero ? trace_zero(u, w, p, 1e-8)
                                              : trace_infinity(u, w, p, 1e-8);
    double sup = 0.0;
    for (int k = 1; k <= 40; ++k) {
        const double t = side == Side::Zero ? u.anchor * std::pow(2.0, -k)
                                            : u.anchor * std::pow(2.0, k);
        const double modulus = side == Side::Zero ? omega0(w, p, t) : omega_inf(w, p, t);
        if (!(modulus > 0.0)) continue;
        sup = std::max(sup, std::fabs(u.value_at(t) - tr.value) / modulus);
    }
    return sup;
}

double weighted_distance(const WeightProfile& w, double p, double x, double y) {
    if (!(x > 0.0) || !(y > 0.0))
        throw PreconditionError("weighted_distance requires positive points");
    if (x == y) return 0.0;
    const double lo = std::min(x, y), hi = std::max(x, y);
    return quad::integrate(sigma_integrand(w, p), lo, hi, 1e-10).value;
}

double morrey_modulus(const DirichletFunction& u, const WeightProfile& w, double p,
                      const std::vector<double>& grid) {
    const double exponent = 1.0 - 1.0 / p;
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = u.value_at(grid[i]);

    double sup = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            const double d = weighted_distance(w, p, grid[i], grid[j]);
            if (d < 1e-14) continue;  // coincident-to-machine points
            sup = std::max(sup, std::fabs(values[i] - values[j]) / std::pow(d, exponent));
        }
    }
    return sup;
}

}  // namespace dirichlet
