#pragma once

#include <optional>
#include <vector>

#include "dirichlet/space.hpp"
#include "dirichlet/varmin.hpp"

namespace dirichlet {

/// One member of an approximation sequence toward compactly supported
/// functions: the approximant, its derivative support window, the measured
/// convergence gap ||(u_n - u)'||_{L^p(omega)}, and the closed-form
/// prediction of that gap when one exists.
struct ApproximationStep {
    int index = 0;
    DirichletFunction approximant;
    double support_lo = 0.0;
    double support_hi = 0.0;
    double gap = 0.0;
    std::optional<double> predicted_gap;
};

/// Window truncation: the derivative becomes u' restricted to (1/n, n), so
/// the result vanishes near 0 and is constant past n. Requires n > 1.
DirichletFunction truncate_sequence(const DirichletFunction& u, int n);

enum class ExtensionSide { TailToInfinity, HeadToZero };

struct CaloricExtensionResult {
    DirichletFunction approximant;
    double predicted_gap = 0.0;  // |C|^p * (integral of sigma over the ramp)^(1-p), p-th root
};

/// Replaces the constant tail (or head) of u beyond `cut` by the exact
/// p-energy minimizer ramp down to 0 at `horizon`, producing a compactly
/// supported function. u must be constant beyond the cut on the chosen side
/// (checked by sampling); a nonunit constant is handled by internal scaling.
/// The predicted gap is exact, not an estimate.
CaloricExtensionResult caloric_extension(const DirichletFunction& u,
                                         const WeightProfile& w, double p,
                                         ExtensionSide side, double cut, double horizon);

/// Zero-mean window truncation for the doubly-integrable regime: derivative
/// chi_(1/n,n) * (u' - c_n) with c_n the window mean of u', so the integral
/// of the new derivative is exactly zero and the result is supported in
/// [1/n, n].
DirichletFunction zero_mean_truncation(const DirichletFunction& u, int n);

enum class ApproxBuilder { Truncate, CaloricToInfinity, CaloricToZero, ZeroMean };

enum class ConvergenceVerdict { Converging, Stalling, Undetermined };

struct Diagnostic {
    std::vector<ApproximationStep> steps;
    ConvergenceVerdict verdict = ConvergenceVerdict::Undetermined;
};

struct DiagnosticOptions {
    double tol = 1e-8;
    double cut = 1.0;  // used by the caloric builders; schedule entries k give
                       // horizons cut*2^k (tail) or cut*2^-k (head)
};

/// Runs a builder along an increasing schedule, measuring the gap at each
/// step and cross-checking it against the closed-form prediction when one is
/// available. Converging: the gaps fall below tol, or show sustained
/// geometric decrease (five consecutive ratios <= 0.95). Stalling: five
/// consecutive gaps within 1% of each other above tol.
Diagnostic convergence_diagnostic(const DirichletFunction& u, ApproxBuilder builder,
                                  const WeightProfile& w, double p,
                                  const std::vector<int>& schedule,
                                  const DiagnosticOptions& options = {});

const char* to_string(ConvergenceVerdict v);

}  // namespace dirichlet
