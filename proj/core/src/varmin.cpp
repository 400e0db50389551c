#include "dirichlet/varmin.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace dirichlet {

namespace {

double sigma_integral(const WeightProfile& w, double p, double a, double b) {
    if (w.sigma) return w.sigma->antiderivative(p, b) - w.sigma->antiderivative(p, a);
    auto sigma = [&w, p](double t) { return dual_density(w, p, t); };
    return quad::integrate(sigma, a, b, 1e-11).value;
}

double signed_power(double x, double e) {
    return std::pow(std::fabs(x), e) * (x < 0.0 ? -1.0 : 1.0);
}

// Thomas algorithm for the p = 2 interior equations
//   m_{i-1} phi_{i-1} - (m_{i-1} + m_i) phi_i + m_i phi_{i+1} = 0.
std::vector<double> solve_tridiagonal_p2(const std::vector<double>& mass, double left,
                                         double right) {
    const std::size_t cells = mass.size();
    const std::size_t interior = cells - 1;
    std::vector<double> diag(interior), upper(interior), rhs(interior, 0.0);
    for (std::size_t i = 0; i < interior; ++i) {
        diag[i] = -(mass[i] + mass[i + 1]);
        upper[i] = mass[i + 1];
    }
    rhs[0] -= mass[0] * left;
    rhs[interior - 1] -= mass[cells - 1] * right;

    for (std::size_t i = 1; i < interior; ++i) {
        const double f = mass[i] / diag[i - 1];
        diag[i] -= f * upper[i - 1];
        rhs[i] -= f * rhs[i - 1];
    }
    std::vector<double> x(interior);
    x[interior - 1] = rhs[interior - 1] / diag[interior - 1];
    for (std::size_t i = interior - 1; i-- > 0;)
        x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
    return x;
}

struct DiscreteObjective {
    const std::vector<double>& mass;  // cell masses, size n-1
    double dt;
    double p;

    double operator()(const std::vector<double>& phi) const {
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < phi.size(); ++i) {
            const double d = (phi[i + 1] - phi[i]) / dt;
            total += mass[i] * std::pow(std::fabs(d), p);
        }
        return total;
    }

    // Gradient with respect to the interior values phi_1..phi_{n-2}.
    void gradient(const std::vector<double>& phi, std::vector<double>& g) const {
        const std::size_t n = phi.size();
        for (std::size_t j = 1; j + 1 < n; ++j) {
            const double dl = (phi[j] - phi[j - 1]) / dt;
            const double dr = (phi[j + 1] - phi[j]) / dt;
            g[j - 1] = (p / dt) * (mass[j - 1] * signed_power(dl, p - 1.0) -
                                   mass[j] * signed_power(dr, p - 1.0));
        }
    }
};

}  // namespace

void MinimizerProblem::validate() const {
    if (!(0.0 < k && k < K) || !std::isfinite(K))
        throw PreconditionError("minimizer problem requires 0 < k < K < infinity");
    if (a == 0.0) throw PreconditionError("minimizer boundary value a must be nonzero");
    if (!(p > 1.0)) throw PreconditionError("minimizer exponent requires p > 1");
}

MinimizerSolution closed_form_minimizer(const MinimizerProblem& prob) {
    prob.validate();
    const double N = sigma_integral(prob.weight, prob.p, prob.k, prob.K);

    MinimizerSolution sol;
    sol.normalizer = N;
    sol.minimal_energy = std::pow(std::fabs(prob.a), prob.p) * std::pow(N, 1.0 - prob.p);

    const WeightProfile w = prob.weight;
    const double p = prob.p, k = prob.k, K = prob.K, a = prob.a;
    if (prob.side == ConstraintSide::LeftConstraint) {
        sol.evaluate = [w, p, k, K, a, N](double t) {
            return a * sigma_integral(w, p, t, K) / N;
        };
    } else {
        sol.evaluate = [w, p, k, K, a, N](double t) {
            return a * sigma_integral(w, p, k, t) / N;
        };
    }
    return sol;
}

double energy(const quad::Integrand& phi_derivative, const WeightProfile& w, double p,
              double k, double K) {
    if (!(0.0 < k && k < K)) throw PreconditionError("energy requires 0 < k < K");
    auto g = [&phi_derivative, &w, p](double t) {
        const double d = phi_derivative(t);
        if (d == 0.0) return 0.0;
        return std::pow(std::fabs(d), p) * w.evaluator(t);
    };
    return quad::integrate(g, k, K, 1e-10).value;
}

double minimal_energy(const MinimizerProblem& prob) {
    prob.validate();
    const double N = sigma_integral(prob.weight, prob.p, prob.k, prob.K);
    return std::pow(std::fabs(prob.a), prob.p) * std::pow(N, 1.0 - prob.p);
}

DiscreteMinimizerResult discrete_minimizer(const MinimizerProblem& prob, int n) {
    prob.validate();
    if (n < 3) throw PreconditionError("discrete_minimizer requires n >= 3");

    DiscreteMinimizerResult result;
    const double dt = (prob.K - prob.k) / (n - 1);
    result.grid.resize(n);
    for (int i = 0; i < n; ++i) result.grid[i] = prob.k + i * dt;
    result.grid.back() = prob.K;

    std::vector<double> mass(n - 1);
    for (int i = 0; i + 1 < n; ++i)
        mass[i] = quad::integrate(prob.weight.evaluator, result.grid[i],
                                  result.grid[i + 1], 1e-11)
                      .value;

    const double left = prob.side == ConstraintSide::LeftConstraint ? prob.a : 0.0;
    const double right = prob.side == ConstraintSide::LeftConstraint ? 0.0 : prob.a;

    std::vector<double> phi(n);
    for (int i = 0; i < n; ++i) {
        const double s = static_cast<double>(i) / (n - 1);
        phi[i] = left + (right - left) * s;  // linear interpolant start
    }
    phi.front() = left;
    phi.back() = right;

    DiscreteObjective objective{mass, dt, prob.p};

    if (prob.p == 2.0) {
        auto interior = solve_tridiagonal_p2(mass, left, right);
        for (int i = 1; i + 1 < n; ++i) phi[i] = interior[i - 1];
        result.values = std::move(phi);
        result.energy = objective(result.values);
        result.iterations = 1;
        return result;
    }

    // Damped Newton descent with Armijo backtracking. The Hessian of the
    // discretized energy is tridiagonal with cell coefficients
    // p(p-1) m_i |d_i|^(p-2) / dt^2, so each direction solve is O(n).
    const bool ill_conditioned = prob.p < 1.2;
    const double grad_tol = ill_conditioned ? 1e-6 : 1e-10;
    constexpr double kArmijo = 1e-4;
    constexpr int kMaxIterations = 500;
    const double p = prob.p;
    const double d_floor = 1e-9 * std::fabs(prob.a) / (prob.K - prob.k);

    const std::size_t interior = n - 2;
    std::vector<double> g(interior, 0.0), direction(interior, 0.0);
    std::vector<double> coeff(n - 1), diag(interior), upper(interior), rhs(interior);
    std::vector<double> phi_prev;
    double f = objective(phi);

    int iter = 0;
    for (; iter < kMaxIterations; ++iter) {
        objective.gradient(phi, g);
        double gnorm2 = 0.0;
        for (double gi : g) gnorm2 += gi * gi;
        const double gnorm = std::sqrt(gnorm2);
        if (gnorm <= grad_tol) break;

        for (int i = 0; i + 1 < n; ++i) {
            const double d = (phi[i + 1] - phi[i]) / dt;
            const double mag = std::max(std::fabs(d), d_floor);
            coeff[i] = p * (p - 1.0) * mass[i] * std::pow(mag, p - 2.0) / (dt * dt);
        }
        for (std::size_t j = 0; j < interior; ++j) {
            diag[j] = coeff[j] + coeff[j + 1];
            upper[j] = -coeff[j + 1];
            rhs[j] = g[j];
        }
        // Thomas solve of H s = g gives the Newton direction s.
        for (std::size_t j = 1; j < interior; ++j) {
            const double factor = -coeff[j] / diag[j - 1];
            diag[j] -= factor * upper[j - 1];
            rhs[j] -= factor * rhs[j - 1];
        }
        direction[interior - 1] = rhs[interior - 1] / diag[interior - 1];
        for (std::size_t j = interior - 1; j-- > 0;)
            direction[j] = (rhs[j] - upper[j] * direction[j + 1]) / diag[j];

        double descent = 0.0;  // g . s, positive since H is positive definite
        for (std::size_t j = 0; j < interior; ++j) descent += g[j] * direction[j];
        if (!(descent > 0.0)) {
            direction = g;  // fall back to steepest descent
            descent = gnorm2;
        }

        phi_prev = phi;
        double trial = 1.0;
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            for (std::size_t j = 0; j < interior; ++j)
                phi[j + 1] = phi_prev[j + 1] - trial * direction[j];
            const double f_new = objective(phi);
            // The epsilon term keeps the test meaningful once the predicted
            // decrease falls below the representable resolution of f.
            const double f_eps = 4.0 * std::numeric_limits<double>::epsilon() *
                                 (std::fabs(f) + std::fabs(f_new));
            if (f_new <= f - kArmijo * trial * descent + f_eps) {
                f = f_new;
                accepted = true;
                break;
            }
            trial *= 0.5;
        }
        if (!accepted) {
            phi = phi_prev;  // no acceptable step; gradient is noise-level
            break;
        }
    }

    objective.gradient(phi, g);
    double gnorm = 0.0;
    for (double gi : g) gnorm += gi * gi;
    gnorm = std::sqrt(gnorm);
    if (gnorm > grad_tol) {
        std::ostringstream msg;
        msg << "discrete minimizer did not reach gradient tolerance " << grad_tol
            << " within " << kMaxIterations << " iterations (final gradient norm "
            << gnorm << ")";
        throw Error(msg.str());
    }

    result.values = std::move(phi);
    result.energy = f;
    result.iterations = iter;
    return result;
}

}  // namespace dirichlet
