#pragma once

#include <functional>
#include <vector>

#include "dirichlet/quad.hpp"
#include "dirichlet/weights.hpp"

namespace dirichlet {

/// Which endpoint carries the nonzero boundary value a:
/// LeftConstraint means phi(k) = a, phi(K) = 0; RightConstraint the mirror.
enum class ConstraintSide { LeftConstraint, RightConstraint };

/// Boundary-constrained p-energy minimization of
///   E(phi) = integral over [k, K] of |phi'|^p omega
/// over W^{1,p}((k,K)) with the stated boundary data.
struct MinimizerProblem {
    double k;
    double K;
    double a;  // nonzero boundary value
    ConstraintSide side = ConstraintSide::LeftConstraint;
    double p;
    WeightProfile weight;

    void validate() const;
};

/// The closed-form minimizer. `normalizer` is the integral of the dual
/// density sigma over [k, K]; the minimal energy is |a|^p * normalizer^(1-p),
/// and the boundary values of `evaluate` are exact by construction.
struct MinimizerSolution {
    std::function<double(double)> evaluate;  // phi on [k, K]
    double minimal_energy = 0.0;
    double normalizer = 0.0;
};

/// phi(t) = a * N^-1 * integral of sigma over [t, K]  (left constraint), or
/// phi(t) = a * N^-1 * integral of sigma over [k, t]  (right constraint),
/// with N the normalizer.
MinimizerSolution closed_form_minimizer(const MinimizerProblem& prob);

/// E(phi) for a given derivative, by quadrature.
double energy(const quad::Integrand& phi_derivative, const WeightProfile& w, double p,
              double k, double K);

/// |a|^p * (integral of sigma over [k, K])^(1-p), without building phi.
double minimal_energy(const MinimizerProblem& prob);

/// Independent oracle: minimizes the discretized energy
///   sum_i m_i |(phi_{i+1} - phi_i) / dt|^p,   m_i = integral of omega over cell i,
/// over the interior values of a piecewise-linear function on a uniform
/// n-point grid, boundary data fixed. Strictly convex, so the minimum is
/// unique: p = 2 solves a tridiagonal system; general p runs damped descent
/// (Armijo backtracking from a Barzilai-Borwein trial step) to gradient norm
/// 1e-10 (relaxed to 1e-6 for the ill-conditioned p < 1.2).
struct DiscreteMinimizerResult {
    std::vector<double> grid;    // n points, k..K inclusive
    std::vector<double> values;  // phi at the grid points
    double energy = 0.0;
    int iterations = 0;
};
DiscreteMinimizerResult discrete_minimizer(const MinimizerProblem& prob, int n);

}  // namespace dirichlet
