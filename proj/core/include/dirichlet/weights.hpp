#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "dirichlet/errors.hpp"

namespace dirichlet {

/// Closed-form data for the dual density sigma = omega^(-1/(p-1)) of a
/// built-in weight family. `antiderivative(p, t)` is an S with
/// S'(t) = sigma(t); the endpoint limits of S are NaN when the corresponding
/// improper integral of sigma diverges.
struct SigmaClosedForm {
    std::function<double(double p, double t)> antiderivative;
    std::function<double(double p)> limit_at_zero;
    std::function<double(double p)> limit_at_infinity;
};

/// A positive continuous weight on (0, infinity).
///
/// Immutable after construction and safe to share across threads. The
/// evaluator must return a strictly positive finite value at every queried t;
/// parsed weights are probe-checked for this at construction. `dsl` is a
/// textual form that re-parses to the same weight, when one is known.
struct WeightProfile {
    std::function<double(double)> evaluator;
    std::optional<SigmaClosedForm> sigma;
    std::optional<std::pair<double, double>> endpoint_hints;  // power exponents near 0 and infinity
    std::string label;
    std::optional<std::string> dsl;

    double operator()(double t) const { return evaluator(t); }
};

/// Exponents for the two-weight Hardy analysis; p is the Dirichlet exponent,
/// q the target Lebesgue exponent. Both must lie in (1, infinity).
struct ExponentPair {
    double p;
    std::optional<double> q;
};

/// Parses a weight from the expression DSL. Positivity is checked on a
/// geometric probe grid 1e-8..1e8 (200 points); a non-positive or non-finite
/// value is rejected with the offending t in the message.
WeightProfile parse_weight(const std::string& text);

/// omega(t) = t^alpha, with the closed-form sigma antiderivative attached.
WeightProfile make_power(double alpha);

/// omega(t) = t^a0 * (1+t)^(a1-a0): behaves like t^a0 near 0 and t^a1 near
/// infinity. Realizes all four B_p regimes as (a0, a1) vary.
WeightProfile make_two_exponent(double a0, double a1);

/// sigma(t) = omega(t)^(-1/(p-1)). Throws on weight underflow at t.
double dual_density(const WeightProfile& w, double p, double t);

/// Complex-interpolation weight between (w0, p0) and (w1, p1):
///   1/p_theta = (1-theta)/p0 + theta/p1,
///   omega_theta = (omega0^((1-theta)/p0) * omega1^(theta/p1))^(p_theta).
/// Returns (omega_theta, p_theta).
std::pair<WeightProfile, double> interpolate_weights(const WeightProfile& w0, double p0,
                                                     const WeightProfile& w1, double p1,
                                                     double theta);

namespace detail {
/// Formats a double so that it round-trips and is a valid DSL number literal.
std::string format_number(double v);
}

}  // namespace dirichlet
