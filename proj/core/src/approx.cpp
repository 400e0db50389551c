#include "dirichlet/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace dirichlet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sigma_segment(const WeightProfile& w, double p, double a, double b) {
    if (w.sigma) return w.sigma->antiderivative(p, b) - w.sigma->antiderivative(p, a);
    auto sigma = [&w, p](double t) { return dual_density(w, p, t); };
    return quad::integrate(sigma, a, b, 1e-11).value;
}

// ||(u_n - u)'||_{L^p(omega)} as the seminorm of the difference function.
double measure_gap(const DirichletFunction& u_n, const DirichletFunction& u,
                   const WeightProfile& w, double p) {
    DirichletFunction diff;
    diff.anchor = u.anchor;
    diff.anchor_value = 0.0;
    auto va = u_n.derivative;
    auto vb = u.derivative;
    diff.derivative = [va, vb](double t) { return va(t) - vb(t); };
    if (u_n.derivative_support && u.derivative_support) {
        diff.derivative_support = std::make_pair(
            std::min(u_n.derivative_support->first, u.derivative_support->first),
            std::max(u_n.derivative_support->second, u.derivative_support->second));
    }
    diff.label = "(u_n - u)";
    return seminorm(diff, w, p);
}

}  // namespace

DirichletFunction truncate_sequence(const DirichletFunction& u, int n) {
    if (n <= 1) throw PreconditionError("truncate_sequence requires n > 1");
    const double lo = 1.0 / n, hi = static_cast<double>(n);

    DirichletFunction out;
    out.anchor = lo;
    out.anchor_value = 0.0;
    auto v = u.derivative;
    out.derivative = [v, lo, hi](double t) {
        return (t > lo && t < hi) ? v(t) : 0.0;
    };
    double support_lo = lo, support_hi = hi;
    if (u.derivative_support) {
        support_lo = std::max(support_lo, u.derivative_support->first);
        support_hi = std::min(support_hi, u.derivative_support->second);
        if (support_lo > support_hi) support_lo = support_hi;
    }
    out.derivative_support = std::make_pair(support_lo, support_hi);
    out.label = u.label.empty() ? "truncated" : u.label + " truncated to (1/n, n)";
    return out;
}

CaloricExtensionResult caloric_extension(const DirichletFunction& u,
                                         const WeightProfile& w, double p,
                                         ExtensionSide side, double cut,
                                         double horizon) {
    if (!(cut > 0.0)) throw PreconditionError("caloric_extension requires cut > 0");
    if (side == ExtensionSide::TailToInfinity && !(horizon > cut))
        throw PreconditionError("tail extension requires horizon > cut");
    if (side == ExtensionSide::HeadToZero && !(horizon > 0.0 && horizon < cut))
        throw PreconditionError("head extension requires 0 < horizon < cut");

    // The function must be constant beyond the cut on the chosen side.
    const double C = u.value_at(cut);
    const double scale_ref = std::max(1.0, std::fabs(C));
    for (double factor : {1.5, 2.0, 4.0, 8.0, 16.0}) {
        const double t = side == ExtensionSide::TailToInfinity ? cut * factor
                                                               : cut / factor;
        if (std::fabs(u.value_at(t) - C) > 1e-7 * scale_ref) {
            std::ostringstream msg;
            msg << "caloric_extension requires u constant beyond the cut; u("
                << detail::format_number(t) << ") deviates from u(cut)=" << C;
            throw PreconditionError(msg.str());
        }
    }

    const double ramp_lo = side == ExtensionSide::TailToInfinity ? cut : horizon;
    const double ramp_hi = side == ExtensionSide::TailToInfinity ? horizon : cut;
    const double N = sigma_segment(w, p, ramp_lo, ramp_hi);

    CaloricExtensionResult result;
    result.predicted_gap =
        std::fabs(C) * std::pow(N, (1.0 - p) / p);  // p-th root of |C|^p N^(1-p)

    DirichletFunction out;
    auto v = u.derivative;
    const WeightProfile weight = w;
    const double sign = side == ExtensionSide::TailToInfinity ? -1.0 : 1.0;
    out.derivative = [v, weight, p, C, N, ramp_lo, ramp_hi, sign, side](double t) {
        if (t > ramp_lo && t < ramp_hi)
            return sign * C * dual_density(weight, p, t) / N;
        const bool original_side = side == ExtensionSide::TailToInfinity
                                       ? t <= ramp_lo
                                       : t >= ramp_hi;
        return original_side ? v(t) : 0.0;
    };
    if (side == ExtensionSide::TailToInfinity) {
        out.anchor = horizon;
        out.anchor_value = 0.0;
        const double lo =
            u.derivative_support ? std::min(u.derivative_support->first, cut) : 0.0;
        out.derivative_support = std::make_pair(lo, horizon);
    } else {
        out.anchor = horizon;
        out.anchor_value = 0.0;
        const double hi =
            u.derivative_support ? std::max(u.derivative_support->second, cut) : kInf;
        out.derivative_support = std::make_pair(horizon, hi);
    }
    out.label = u.label.empty() ? "caloric extension" : u.label + " + caloric ramp";
    result.approximant = std::move(out);
    return result;
}

DirichletFunction zero_mean_truncation(const DirichletFunction& u, int n) {
    if (n <= 1) throw PreconditionError("zero_mean_truncation requires n > 1");
    const double lo = 1.0 / n, hi = static_cast<double>(n);
    const double window = hi - lo;
    const double mean =
        quad::integrate(u.derivative, lo, hi, 1e-11).value / window;

    DirichletFunction out;
    out.anchor = lo;
    out.anchor_value = 0.0;
    auto v = u.derivative;
    out.derivative = [v, lo, hi, mean](double t) {
        return (t > lo && t < hi) ? v(t) - mean : 0.0;
    };
    out.derivative_support = std::make_pair(lo, hi);
    out.label = u.label.empty() ? "zero-mean truncation"
                                : u.label + " zero-mean truncated";
    return out;
}

Diagnostic convergence_diagnostic(const DirichletFunction& u, ApproxBuilder builder,
                                  const WeightProfile& w, double p,
                                  const std::vector<int>& schedule,
                                  const DiagnosticOptions& options) {
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (schedule[i] <= schedule[i - 1])
            throw PreconditionError("diagnostic schedule must be increasing");

    Diagnostic diag;
    for (int n : schedule) {
        ApproximationStep step;
        step.index = n;
        switch (builder) {
            case ApproxBuilder::Truncate:
                step.approximant = truncate_sequence(u, n);
                break;
            case ApproxBuilder::CaloricToInfinity: {
                auto res = caloric_extension(u, w, p, ExtensionSide::TailToInfinity,
                                             options.cut,
                                             options.cut * std::pow(2.0, n));
                step.approximant = std::move(res.approximant);
                step.predicted_gap = res.predicted_gap;
                break;
            }
            case ApproxBuilder::CaloricToZero: {
                auto res = caloric_extension(u, w, p, ExtensionSide::HeadToZero,
                                             options.cut,
                                             options.cut * std::pow(2.0, -n));
                step.approximant = std::move(res.approximant);
                step.predicted_gap = res.predicted_gap;
                break;
            }
            case ApproxBuilder::ZeroMean:
                step.approximant = zero_mean_truncation(u, n);
                break;
        }
        if (step.approximant.derivative_support) {
            step.support_lo = step.approximant.derivative_support->first;
            step.support_hi = step.approximant.derivative_support->second;
        }
        step.gap = measure_gap(step.approximant, u, w, p);
        diag.steps.push_back(std::move(step));
    }

    // Verdict: below tol, or sustained geometric decrease, means Converging;
    // a plateau above tol means Stalling.
    const auto& steps = diag.steps;
    if (!steps.empty() && steps.back().gap <= options.tol) {
        diag.verdict = ConvergenceVerdict::Converging;
        return diag;
    }
    std::vector<double> ratios;
    for (std::size_t i = 1; i < steps.size(); ++i) {
        const double prev = steps[i - 1].gap;
        ratios.push_back(prev > 0.0 ? steps[i].gap / prev : 0.0);
    }
    auto last_all = [&](std::size_t count, auto pred) {
        if (ratios.size() < count) return false;
        for (std::size_t i = ratios.size() - count; i < ratios.size(); ++i)
            if (!pred(ratios[i])) return false;
        return true;
    };
    const std::size_t decay_window = std::min<std::size_t>(5, std::max<std::size_t>(ratios.size(), 1));
    if (!ratios.empty() && last_all(decay_window, [](double r) { return r <= 0.95; }))
        diag.verdict = ConvergenceVerdict::Converging;
    else if (last_all(4, [](double r) { return r >= 0.99 && r <= 1.01; }))
        diag.verdict = ConvergenceVerdict::Stalling;
    else
        diag.verdict = ConvergenceVerdict::Undetermined;
    return diag;
}

const char* to_string(ConvergenceVerdict v) {
    switch (v) {
        case ConvergenceVerdict::Converging: return "Converging";
        case ConvergenceVerdict::Stalling: return "Stalling";
        case ConvergenceVerdict::Undetermined: return "Undetermined";
    }
    return "Undetermined";
}

}  // namespace dirichlet
