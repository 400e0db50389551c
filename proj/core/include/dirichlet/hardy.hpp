#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dirichlet/quad.hpp"
#include "dirichlet/space.hpp"
#include "dirichlet/weights.hpp"

namespace dirichlet {

/// Hv(t) = integral of v over (0, t]. Requires |v| integrable near 0.
double hardy_transform(const quad::Integrand& v, double t, double tol = 1e-10);

/// H*v(t) = integral of v over [t, infinity). Requires |v| integrable near
/// infinity.
double conj_hardy_transform(const quad::Integrand& v, double t, double tol = 1e-10);

enum class HardyCase { PLEQ, QLTP };  // p <= q, or q < p
enum class HardyOperator { Hardy, Conjugate };

struct NamedQuantity {
    std::string name;
    double value = 0.0;
    quad::QuadOutcome provenance;
};

/// Outcome of a two-weight boundedness test. bounded == Yes requires every
/// case-relevant quantity finite (and, for the conjugate conditions in the
/// p <= q case, both endpoint limits of A(t) below the limit tolerance);
/// bounded == No requires a certified-divergent quantity. Suprema are grid
/// suprema over a geometric grid with one golden-section refinement pass,
/// not certified global suprema.
struct ConditionReport {
    HardyCase applicable_case = HardyCase::PLEQ;
    std::vector<NamedQuantity> quantities;
    Membership bounded = Membership::Unknown;
    std::string note;

    double quantity(const std::string& name) const;
};

/// Boundedness conditions for H : L^p(omega) -> L^q(h).
/// p <= q: E1 = sup_t (int_t^inf h)^(1/q) (int_0^t sigma)^(1-1/p).
/// q < p: the two companion integrals E2 and E3, computed with the inner
/// integrals tabulated at 512 log-spaced nodes and monotone-cubic
/// interpolated.
ConditionReport condition_C(const WeightProfile& w, const WeightProfile& h, double p,
                            double q);

/// Boundedness conditions for the conjugate operator H*.
/// p <= q: A(t) = (int_0^t h)^(1/q) (int_t^inf sigma)^(1-1/p); requires
/// sup A finite and lim A = 0 at both endpoints (checked at the extreme
/// decades against `limit_tol`). q < p: the single integral A.
ConditionReport condition_Cstar(const WeightProfile& w, const WeightProfile& h, double p,
                                double q, double limit_tol = 1e-3);

/// Lower bound on the best constant C in ||Hv||_{L^q(h)} <= C ||v||_{L^p(omega)}
/// (or the H* variant), as a max over a candidate family: indicator
/// derivatives, minimizer-ramp profiles, and piecewise-constant power
/// profiles (deterministic sweep plus `trials` seeded random draws).
/// Refuses unless the matching condition report says bounded = Yes.
double estimate_best_constant(const WeightProfile& w, const WeightProfile& h, double p,
                              double q, HardyOperator side, int trials,
                              std::uint64_t seed = 42);

/// The ratio ||Hv||_{L^q(h)} / ||v||_{L^p(omega)} for one piecewise-constant
/// candidate given by breakpoints and cell values (exposed for property
/// tests: homogeneity, witnesses).
struct PiecewiseConstant {
    std::vector<double> breaks;  // size m+1, increasing, all positive
    std::vector<double> values;  // size m
};
double hardy_ratio(const PiecewiseConstant& v, const WeightProfile& w,
                   const WeightProfile& h, double p, double q, HardyOperator side);

/// For a pair certified unbounded, produces a sequence of candidate ratios
/// pushed toward the offending endpoint; the ratios grow without bound.
std::vector<double> divergence_witness(const WeightProfile& w, const WeightProfile& h,
                                       double p, double q, HardyOperator side,
                                       int steps);

/// Two-weight inequality check for one Dirichlet function:
///   lhs = ||u||_{L^q(h)},  rhs = C * (seminorm + |trace at 0|ptional).
/// The extended form (with the trace term) is used when the trace is nonzero;
/// for trace-zero u the plain form is checked. When u has a nonzero trace at
/// 0 against h non-integrable near 0, the left side cannot be finite; that is
/// reported as the structural obstruction, not as a failure.
struct InequalityReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    bool holds = false;
    bool extended = false;     // trace term included on the right
    bool obstruction = false;  // lhs certifiably infinite
    double trace_zero_value = 0.0;
    std::string note;
};
InequalityReport check_inequality(const DirichletFunction& u, const WeightProfile& w,
                                  const WeightProfile& h, double p, double q, double C);

const char* to_string(HardyCase c);

}  // namespace dirichlet
