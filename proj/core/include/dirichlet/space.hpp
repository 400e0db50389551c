#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dirichlet/classify.hpp"
#include "dirichlet/quad.hpp"
#include "dirichlet/weights.hpp"

namespace dirichlet {

/// An element u of the weighted Dirichlet space, represented by an anchor
/// point a0 in (0, infinity), the anchor value u(a0), and the a.e.
/// derivative v. Values are recovered as u(t) = u(a0) + signed integral of v
/// from a0 to t. Anchoring at an interior point keeps construction free of
/// any endpoint condition; endpoint values are always derived quantities.
///
/// Immutable; all operations on it are pure.
struct DirichletFunction {
    double anchor = 1.0;
    double anchor_value = 0.0;
    std::function<double(double)> derivative;
    std::string label;
    std::optional<std::string> derivative_dsl;  // set when built from a DSL expression
    // Closed interval outside which the derivative is identically zero,
    // when known. Lets evaluation clip integration ranges exactly.
    std::optional<std::pair<double, double>> derivative_support;

    /// u(t), by quadrature from the anchor.
    double value_at(double t, double tol = 1e-10) const;
};

enum class Side { Zero, Infinity };

/// A trace value with its certified error bound
///   certified_error = (integral of |v|^p omega over the tail at `probe`)^(1/p)
///                     * Omega(probe),
/// both factors from converged quadrature. The true endpoint limit differs
/// from `value` by at most certified_error; `value` itself differs from the
/// limit by at most certified_error as well, so it is within 2x of any
/// competing estimate at the same probe.
struct TraceResult {
    double value = 0.0;
    double certified_error = 0.0;
    Side side = Side::Zero;
    double probe = 0.0;
    bool converged = false;  // false when the probe budget ran out
};

/// Endpoint modulus at zero: (integral of sigma over (0, t])^(1 - 1/p).
/// Requires B_p(0); uses the closed-form antiderivative when the weight
/// carries one.
double omega0(const WeightProfile& w, double p, double t);

/// Endpoint modulus at infinity: (integral of sigma over [t, inf))^(1 - 1/p).
double omega_inf(const WeightProfile& w, double p, double t);

/// Seminorm ||u'||_{L^p(omega)} assembled from improper and proper pieces.
/// Returns +infinity when a piece certifiably diverges; throws when a piece
/// is inconclusive ("seminorm undetermined").
double seminorm(const DirichletFunction& u, const WeightProfile& w, double p);

/// Anchor for norm_at: an interior point or an endpoint trace.
using NormAnchor = std::variant<double, Side>;

/// ||u||^(a) = seminorm + |u(a)|, where an endpoint anchor means the trace
/// value and requires the matching B_p condition.
double norm_at(const DirichletFunction& u, const WeightProfile& w, double p,
               NormAnchor anchor, double trace_tol = 1e-8);

/// Trace at 0 with certified error bound; probes anchor*2^-k, k <= 60,
/// until the bound drops below tol.
TraceResult trace_zero(const DirichletFunction& u, const WeightProfile& w, double p,
                       double tol);

/// Trace at infinity, probing anchor*2^k.
TraceResult trace_infinity(const DirichletFunction& u, const WeightProfile& w, double p,
                           double tol);

/// Norm-equivalence constant C_I = (integral of sigma over I)^(1 - 1/p) for
/// I = (a, b), and the factor 1 + C_I bounding the ratio of anchored norms.
/// a == 0 is allowed when the weight is B_p(0).
struct EquivalenceConstant {
    double c = 0.0;
    double factor = 1.0;  // 1 + c
};
EquivalenceConstant equivalence_constant(const WeightProfile& w, double p, double a,
                                         double b);

/// The normalized residual a(t) = (u(t) - trace) / Omega(t) at one probe;
/// a(t) -> 0 toward the endpoint and stays bounded.
double asymptotic_residual(const DirichletFunction& u, const WeightProfile& w, double p,
                           Side side, double t);

/// Max |a(t)| over the geometric probe ladder used by the trace routines.
/// Diagnostic only: a sample sup, not a certified global bound.
double residual_sup(const DirichletFunction& u, const WeightProfile& w, double p,
                    Side side);

/// Weighted Morrey distance d(x, y) = |integral of sigma between x and y|.
double weighted_distance(const WeightProfile& w, double p, double x, double y);

/// max over grid pairs of |u(x) - u(y)| / d(x,y)^(1-1/p). Pairs closer than
/// 1e-14 in d are skipped. Bounded by the seminorm (weighted Morrey
/// inequality).
double morrey_modulus(const DirichletFunction& u, const WeightProfile& w, double p,
                      const std::vector<double>& grid);

}  // namespace dirichlet
