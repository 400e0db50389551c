#pragma once

#include <string>

#include "dirichlet/quad.hpp"
#include "dirichlet/weights.hpp"

namespace dirichlet {

enum class Membership { Yes, No, Unknown };

/// B_p membership of a weight at one endpoint, together with the improper
/// integral of the dual density sigma toward that endpoint.
/// member == Yes exactly when the integral Converged, No when Diverged,
/// Unknown when Inconclusive.
struct BpVerdict {
    Membership member = Membership::Unknown;
    quad::QuadOutcome integral;
};

enum class RegimeTag { ZeroOnly, InfinityOnly, Neither, Both, Unknown };

/// Joint (B_p(0), B_p(infinity)) classification: (Yes,No) -> ZeroOnly,
/// (No,Yes) -> InfinityOnly, (No,No) -> Neither, (Yes,Yes) -> Both; any
/// Unknown poisons the tag.
struct Regime {
    RegimeTag tag = RegimeTag::Unknown;
    BpVerdict zero;
    BpVerdict infinity;
};

enum class D0Characterization {
    KernelOfTraceZero,
    KernelOfTraceInfinity,
    WholeSpace,
    IntersectionOfKernels,
    Undetermined,
};

/// The density characterization of the closure of smooth compactly supported
/// functions, determined exactly by the regime. Trace well-posedness at an
/// endpoint coincides with the B_p membership there.
struct DensityReport {
    Regime regime;
    D0Characterization d0 = D0Characterization::Undetermined;
    Membership trace_zero_wellposed = Membership::Unknown;
    Membership trace_infinity_wellposed = Membership::Unknown;
    std::string notes;
};

/// Decides B_p(0): integrability of sigma = omega^(-1/(p-1)) over (0, 1].
/// A power-law endpoint hint alpha short-circuits quadrature via the analytic
/// rule alpha < p-1 (the borderline alpha = p-1 is non-membership).
BpVerdict bp_zero(const WeightProfile& w, double p, double tol = 1e-8);

/// Decides B_p(infinity): integrability of sigma over [1, infinity);
/// hint rule alpha > p-1.
BpVerdict bp_infinity(const WeightProfile& w, double p, double tol = 1e-8);

/// Combines both endpoint verdicts.
Regime regime_of(const WeightProfile& w, double p, double tol = 1e-8);

/// Full density report for (w, p).
DensityReport density_report(const WeightProfile& w, double p, double tol = 1e-8);

const char* to_string(Membership m);
const char* to_string(RegimeTag t);
const char* to_string(D0Characterization c);
const char* to_string(quad::Verdict v);

}  // namespace dirichlet
