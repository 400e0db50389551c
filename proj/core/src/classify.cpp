#include "dirichlet/classify.hpp"

#include <cmath>

namespace dirichlet {

namespace {

Membership from_verdict(quad::Verdict v) {
    switch (v) {
        case quad::Verdict::Converged: return Membership::Yes;
        case quad::Verdict::Diverged: return Membership::No;
        case quad::Verdict::Inconclusive: return Membership::Unknown;
    }
    return Membership::Unknown;
}

// Synthesized Diverged outcome for a hint-certified non-member: the partial
// integral of sigma over the nearest few shells is kept as diagnostic value.
quad::QuadOutcome divergent_outcome(const WeightProfile& w, double p, bool at_zero) {
    auto sigma = [&w, p](double t) { return dual_density(w, p, t); };
    quad::QuadOutcome partial =
        at_zero ? quad::integrate(sigma, std::pow(2.0, -9), 1.0, 1e-8)
                : quad::integrate(sigma, 1.0, std::pow(2.0, 9), 1e-8);
    quad::QuadOutcome out;
    out.value = partial.value;
    out.error_estimate = 0.0;
    out.verdict = quad::Verdict::Diverged;
    out.evaluations = partial.evaluations;
    return out;
}

}  // namespace

BpVerdict bp_zero(const WeightProfile& w, double p, double tol) {
    if (!(p > 1.0)) throw PreconditionError("bp_zero requires p > 1");
    BpVerdict v;
    if (w.endpoint_hints) {
        const double alpha = w.endpoint_hints->first;
        if (!(alpha < p - 1.0)) {  // includes the borderline alpha == p-1
            v.integral = divergent_outcome(w, p, /*at_zero=*/true);
            v.member = Membership::No;
            return v;
        }
    }
    auto sigma = [&w, p](double t) { return dual_density(w, p, t); };
    v.integral = quad::improper_to_zero(sigma, 1.0, tol);
    v.member = from_verdict(v.integral.verdict);
    return v;
}

BpVerdict bp_infinity(const WeightProfile& w, double p, double tol) {
    if (!(p > 1.0)) throw PreconditionError("bp_infinity requires p > 1");
    BpVerdict v;
    if (w.endpoint_hints) {
        const double alpha = w.endpoint_hints->second;
        if (!(alpha > p - 1.0)) {
            v.integral = divergent_outcome(w, p, /*at_zero=*/false);
            v.member = Membership::No;
            return v;
        }
    }
    auto sigma = [&w, p](double t) { return dual_density(w, p, t); };
    v.integral = quad::improper_to_infinity(sigma, 1.0, tol);
    v.member = from_verdict(v.integral.verdict);
    return v;
}

Regime regime_of(const WeightProfile& w, double p, double tol) {
    Regime r;
    r.zero = bp_zero(w, p, tol);
    r.infinity = bp_infinity(w, p, tol);
    if (r.zero.member == Membership::Unknown || r.infinity.member == Membership::Unknown) {
        r.tag = RegimeTag::Unknown;
    } else if (r.zero.member == Membership::Yes && r.infinity.member == Membership::No) {
        r.tag = RegimeTag::ZeroOnly;
    } else if (r.zero.member == Membership::No && r.infinity.member == Membership::Yes) {
        r.tag = RegimeTag::InfinityOnly;
    } else if (r.zero.member == Membership::No && r.infinity.member == Membership::No) {
        r.tag = RegimeTag::Neither;
    } else {
        r.tag = RegimeTag::Both;
    }
    return r;
}

DensityReport density_report(const WeightProfile& w, double p, double tol) {
    DensityReport report;
    report.regime = regime_of(w, p, tol);
    report.trace_zero_wellposed = report.regime.zero.member;
    report.trace_infinity_wellposed = report.regime.infinity.member;
    switch (report.regime.tag) {
        case RegimeTag::ZeroOnly:
            report.d0 = D0Characterization::KernelOfTraceZero;
            report.notes =
                "dual density integrable near 0 only: the smooth compactly supported "
                "functions are dense exactly in the kernel of the trace at 0; the "
                "trace at 0 is well posed, the trace at infinity is not. Both "
                "directions of this characterization are exact.";
            break;
        case RegimeTag::InfinityOnly:
            report.d0 = D0Characterization::KernelOfTraceInfinity;
            report.notes =
                "dual density integrable near infinity only: closure equals the "
                "kernel of the trace at infinity; the trace at infinity is well "
                "posed, the trace at 0 is not. Both directions are exact.";
            break;
        case RegimeTag::Neither:
            report.d0 = D0Characterization::WholeSpace;
            report.notes =
                "dual density integrable at neither endpoint: compactly supported "
                "functions are dense in the whole space and no endpoint trace is "
                "well posed. Both directions are exact.";
            break;
        case RegimeTag::Both:
            report.d0 = D0Characterization::IntersectionOfKernels;
            report.notes =
                "dual density integrable at both endpoints: closure equals the "
                "intersection of the two trace kernels; both traces are well posed. "
                "Both directions are exact.";
            break;
        case RegimeTag::Unknown:
            report.d0 = D0Characterization::Undetermined;
            report.notes =
                "an endpoint integral of the dual density was numerically "
                "inconclusive; no density characterization is claimed.";
            break;
    }
    return report;
}

const char* to_string(Membership m) {
    switch (m) {
        case Membership::Yes: return "Yes";
        case Membership::No: return "No";
        case Membership::Unknown: return "Unknown";
    }
    return "Unknown";
}

const char* to_string(RegimeTag t) {
    switch (t) {
        case RegimeTag::ZeroOnly: return "ZeroOnly";
        case RegimeTag::InfinityOnly: return "InfinityOnly";
        case RegimeTag::Neither: return "Neither";
        case RegimeTag::Both: return "Both";
        case RegimeTag::Unknown: return "Unknown";
    }
    return "Unknown";
}

const char* to_string(D0Characterization c) {
    switch (c) {
        case D0Characterization::KernelOfTraceZero: return "KernelOfTraceZero";
        case D0Characterization::KernelOfTraceInfinity: return "KernelOfTraceInfinity";
        case D0Characterization::WholeSpace: return "WholeSpace";
        case D0Characterization::IntersectionOfKernels: return "IntersectionOfKernels";
        case D0Characterization::Undetermined: return "Undetermined";
    }
    return "Undetermined";
}

const char* to_string(quad::Verdict v) {
    switch (v) {
        case quad::Verdict::Converged: return "Converged";
        case quad::Verdict::Diverged: return "Diverged";
        case quad::Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

}  // namespace dirichlet
