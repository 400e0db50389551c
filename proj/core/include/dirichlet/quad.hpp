#pragma once

#include <functional>

#include "dirichlet/errors.hpp"

namespace dirichlet::quad {

enum class Verdict { Converged, Diverged, Inconclusive };

/// Result of a (possibly improper) integral.
///
/// `value` approximates the integral when Converged. When Diverged it carries
/// the partial integral over the largest resolved subinterval, which is
/// diagnostic information and not the integral. `error_estimate` is
/// meaningful only when Converged.
struct QuadOutcome {
    double value = 0.0;
    double error_estimate = 0.0;
    Verdict verdict = Verdict::Inconclusive;
    long evaluations = 0;
};

enum class Endpoint { Zero, Infinity };

/// Estimated local power-law exponent of an integrand near an endpoint,
/// from a least-squares fit of log f against log t.
struct ExponentEstimate {
    enum class Confidence { High, Low };
    double slope = 0.0;
    Confidence confidence = Confidence::Low;
    double residual = 0.0;  // RMS residual of the fit in log space
};

using Integrand = std::function<double(double)>;

inline constexpr double kAbsFloor = 1e-12;    // absolute tolerance floor
inline constexpr int kMaxIntervals = 10000;   // subdivision budget per call
inline constexpr int kMaxShells = 200;        // dyadic shell budget per call
inline constexpr double kExponentMargin = 0.1;

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] with
/// 0 < a < b < infinity. Converged means
/// |value - integral| <= max(tol*|value|, kAbsFloor) under the usual
/// nested-rule error model. Exhausting the subdivision budget yields
/// Inconclusive; a non-finite integrand value throws.
QuadOutcome integrate(const Integrand& f, double a, double b, double tol);

/// Decides and evaluates the improper integral of f over (0, b].
///
/// The endpoint exponent of f near 0 is estimated first; outside the margin
/// around -1 that decides convergence directly. Within the margin (or when
/// the fit is unusable) dyadic shell sums [b*2^-(k+1), b*2^-k] decide:
/// sustained geometric growth means Diverged, sustained geometric decay means
/// Converged, equal contributions (the harmonic borderline) mean Diverged,
/// and anything else within the shell budget is Inconclusive.
QuadOutcome improper_to_zero(const Integrand& f, double b, double tol);

/// Mirror of improper_to_zero for the integral of f over [a, infinity),
/// using shells [a*2^k, a*2^(k+1)].
QuadOutcome improper_to_infinity(const Integrand& f, double a, double tol);

/// Least-squares power-law exponent of f approaching an endpoint, fitted on
/// 12 geometric probes with ratio 2 starting from `scale`. All probes must
/// be positive.
ExponentEstimate endpoint_exponent(const Integrand& f, Endpoint endpoint, double scale = 1.0);

}  // namespace dirichlet::quad
