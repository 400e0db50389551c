#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "dirichlet/approx.hpp"
#include "test_support.hpp"

using namespace dirichlet;
using testsupport::make_tent;

namespace {

// u(t) = min(t, 1): rises on (0,1), constant 1 afterwards.
DirichletFunction rising_plateau() {
    DirichletFunction u;
    u.anchor = 1.0;
    u.anchor_value = 1.0;
    u.derivative = [](double t) { return t < 1.0 ? 1.0 : 0.0; };
    u.derivative_support = std::make_pair(0.0, 1.0);
    u.label = "min(t,1)";
    return u;
}

// Constant 1 near zero, falling to 0 on [1, 2], zero afterwards.
DirichletFunction falling_head() {
    DirichletFunction u;
    u.anchor = 0.5;
    u.anchor_value = 1.0;
    u.derivative = [](double t) { return (t > 1.0 && t < 2.0) ? -1.0 : 0.0; };
    u.derivative_support = std::make_pair(1.0, 2.0);
    u.label = "falling head";
    return u;
}

double sup_difference(const DirichletFunction& a, const DirichletFunction& b,
                      double lo, double hi, int samples = 17) {
    double sup = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = lo + (hi - lo) * i / (samples - 1);
        sup = std::max(sup, std::fabs(a.value_at(t) - b.value_at(t)));
    }
    return sup;
}

}  // namespace

TEST_CASE("truncate_sequence keeps functions already inside the window") {
    auto tent = make_tent(1.0, 3.0, 1.0);
    auto truncated = truncate_sequence(tent, 4);
    for (double t : {0.5, 1.5, 2.0, 2.7, 5.0})
        CHECK(truncated.derivative(t) == doctest::Approx(tent.derivative(t)));

    DirichletFunction diff;
    diff.anchor = 2.0;
    diff.derivative = [&](double t) {
        return truncated.derivative(t) - tent.derivative(t);
    };
    CHECK(seminorm(diff, make_power(0.0), 2.0) == doctest::Approx(0.0));
}

TEST_CASE("truncate_sequence drops head mass") {
    auto u = rising_plateau();
    auto truncated = truncate_sequence(u, 2);
    // Derivative survives only on (1/2, 1).
    CHECK(truncated.value_at(0.4) == doctest::Approx(0.0));
    CHECK(truncated.value_at(0.75) == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(truncated.value_at(3.0) == doctest::Approx(0.5).epsilon(1e-9));

    // gap^2 = integral over (0, 1/2) of 1 = 1/2 for omega = 1, p = 2.
    DirichletFunction diff;
    diff.anchor = 1.0;
    diff.derivative = [&](double t) {
        return truncated.derivative(t) - u.derivative(t);
    };
    const double gap = seminorm(diff, make_power(0.0), 2.0);
    CHECK(gap * gap == doctest::Approx(0.5).epsilon(1e-8));

    CHECK(testsupport::throws_containing([&] { truncate_sequence(u, 1); }, "n > 1"));
}

TEST_CASE("caloric extension replaces the constant tail with the exact ramp") {
    auto u = rising_plateau();
    auto w = make_power(0.0);
    auto res = caloric_extension(u, w, 2.0, ExtensionSide::TailToInfinity, 1.0, 3.0);

    // phi = (3 - t)/2 on [1, 3]; the approximant keeps u below the cut.
    CHECK(res.approximant.value_at(0.5) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(res.approximant.value_at(2.0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(res.approximant.value_at(1.5) == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(res.approximant.value_at(4.0) == doctest::Approx(0.0));

    // predicted gap^2 = (horizon - cut)^(1-p) = 1/2.
    CHECK(res.predicted_gap == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    DirichletFunction diff;
    diff.anchor = 1.0;
    diff.derivative = [&](double t) {
        return res.approximant.derivative(t) - u.derivative(t);
    };
    CHECK(seminorm(diff, w, 2.0) == doctest::Approx(res.predicted_gap).epsilon(1e-6));
}

TEST_CASE("caloric extension rejects non-constant tails") {
    auto tent = make_tent(1.0, 3.0, 1.0);  // not constant beyond cut = 1.5
    CHECK(testsupport::throws_containing(
        [&] {
            caloric_extension(tent, make_power(0.0), 2.0,
                              ExtensionSide::TailToInfinity, 1.5, 8.0);
        },
        "constant beyond the cut"));
}

TEST_CASE("caloric gap identity along a horizon schedule") {
    auto u = rising_plateau();

    SUBCASE("omega = t^(1/2): predicted gap^2 = 1/(2 sqrt(horizon) - 2) -> 0") {
        auto w = make_power(0.5);
        for (int k : {2, 4, 6}) {
            const double horizon = std::pow(2.0, k);
            auto res = caloric_extension(u, w, 2.0, ExtensionSide::TailToInfinity, 1.0,
                                         horizon);
            const double predicted_sq = 1.0 / (2.0 * std::sqrt(horizon) - 2.0);
            CHECK(res.predicted_gap ==
                  doctest::Approx(std::sqrt(predicted_sq)).epsilon(1e-10));
        }
    }

    SUBCASE("omega = t^2: predicted gap^2 -> 1, the stalling mechanism") {
        auto w = make_power(2.0);
        for (int k : {4, 8}) {
            const double horizon = std::pow(2.0, k);
            auto res = caloric_extension(u, w, 2.0, ExtensionSide::TailToInfinity, 1.0,
                                         horizon);
            // integral of t^-2 over [1, horizon] = 1 - 1/horizon.
            CHECK(res.predicted_gap ==
                  doctest::Approx(std::pow(1.0 - 1.0 / horizon, -0.5)).epsilon(1e-10));
        }
    }
}

TEST_CASE("head-to-zero caloric extension") {
    auto u = falling_head();
    auto w = make_power(1.0);  // sigma = 1/t, not integrable at 0 for p = 2
    auto res =
        caloric_extension(u, w, 2.0, ExtensionSide::HeadToZero, 0.5, 0.125);
    // The ramp rises from 0 at the horizon to u(cut) = 1 at the cut.
    CHECK(res.approximant.value_at(0.1) == doctest::Approx(0.0));
    CHECK(res.approximant.value_at(0.5) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(res.approximant.value_at(1.5) == doctest::Approx(0.5).epsilon(1e-9));
    // predicted gap^2 = (integral of 1/t over [1/8, 1/2])^(1-p) = 1/log 4.
    CHECK(res.predicted_gap ==
          doctest::Approx(std::sqrt(1.0 / std::log(4.0))).epsilon(1e-9));

    DirichletFunction diff;
    diff.anchor = 1.0;
    diff.derivative = [&](double t) {
        return res.approximant.derivative(t) - u.derivative(t);
    };
    CHECK(seminorm(diff, w, 2.0) == doctest::Approx(res.predicted_gap).epsilon(1e-6));
}

TEST_CASE("zero_mean_truncation") {
    SUBCASE("zero-mean derivative inside the window is untouched") {
        auto tent = make_tent(1.0, 3.0, 1.0);
        auto zm = zero_mean_truncation(tent, 4);
        for (double t : {0.5, 1.3, 2.0, 2.9, 3.5})
            CHECK(zm.derivative(t) == doctest::Approx(tent.derivative(t)).epsilon(1e-12));
    }

    SUBCASE("window mean is removed exactly") {
        DirichletFunction u;
        u.anchor = 1.0;
        u.anchor_value = 0.0;
        u.derivative = [](double t) { return (t > 1.0 && t < 2.0) ? 1.0 : 0.0; };
        u.derivative_support = std::make_pair(1.0, 2.0);
        auto zm = zero_mean_truncation(u, 4);
        // c_4 = 1 / (4 - 1/4) = 4/15.
        CHECK(zm.derivative(3.0) == doctest::Approx(-4.0 / 15.0).epsilon(1e-10));
        CHECK(zm.derivative(1.5) == doctest::Approx(1.0 - 4.0 / 15.0).epsilon(1e-10));
        const double total = quad::integrate(zm.derivative, 0.25, 4.0, 1e-11).value;
        CHECK(total == doctest::Approx(0.0));
        // The result is genuinely compactly supported in [1/4, 4].
        CHECK(zm.value_at(4.5) == doctest::Approx(0.0));
        CHECK(zm.value_at(0.1) == doctest::Approx(0.0));
    }

    SUBCASE("gap vanishes for admissible u in the Both regime") {
        // u' = chi_(1,2) - 2 t^-2 chi_(2,inf): total integral zero, so u has
        // trace 0 at both endpoints under the two-exponent weight.
        DirichletFunction u;
        u.anchor = 0.5;
        u.anchor_value = 0.0;
        u.derivative = [](double t) {
            if (t > 1.0 && t < 2.0) return 1.0;
            if (t >= 2.0) return -2.0 / (t * t);
            return 0.0;
        };
        u.derivative_support =
            std::make_pair(1.0, std::numeric_limits<double>::infinity());
        // gap^2 = c_n^2 * (omega mass of the window) + dropped tail energy,
        // both ~ n^(-3/2), so the gap decays like n^(-3/4).
        auto w = make_two_exponent(0.5, 1.5);
        std::vector<double> gaps;
        for (int n : {4, 16, 64}) {
            auto zm = zero_mean_truncation(u, n);
            DirichletFunction diff;
            diff.anchor = 1.0;
            diff.derivative = [&](double t) { return zm.derivative(t) - u.derivative(t); };
            gaps.push_back(seminorm(diff, w, 2.0));
        }
        CHECK(gaps[1] < 0.6 * gaps[0]);
        CHECK(gaps[2] < 0.6 * gaps[1]);
        CHECK(gaps[2] < 0.1);
    }
}

TEST_CASE("convergence_diagnostic: caloric flow converges when sigma diverges at infinity") {
    auto u = rising_plateau();
    auto w = make_power(0.0);
    std::vector<int> schedule = {1, 2, 3, 4, 5, 6, 7, 8};
    auto diag = convergence_diagnostic(u, ApproxBuilder::CaloricToInfinity, w, 2.0,
                                       schedule, {1e-8, 1.0});
    CHECK(diag.verdict == ConvergenceVerdict::Converging);
    for (std::size_t i = 0; i < diag.steps.size(); ++i) {
        const auto& step = diag.steps[i];
        REQUIRE(step.predicted_gap.has_value());
        // Exact identity: gap^2 = (2^k - 1)^(-1).
        const double expected = std::pow(std::pow(2.0, step.index) - 1.0, -0.5);
        CHECK(*step.predicted_gap == doctest::Approx(expected).epsilon(1e-12));
        CHECK(step.gap == doctest::Approx(*step.predicted_gap).epsilon(1e-4));
    }
    // Companion: uniform convergence on the compact set [1/2, 2].
    double previous = 1e9;
    for (const auto& step : {diag.steps[1], diag.steps[4], diag.steps[7]}) {
        const double sup = sup_difference(step.approximant, u, 0.5, 2.0);
        CHECK(sup < previous);
        previous = sup;
    }
    CHECK(previous < 0.01);
}

TEST_CASE("convergence_diagnostic: caloric flow stalls when sigma converges at infinity") {
    auto u = rising_plateau();
    auto w = make_power(2.0);
    std::vector<int> schedule = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    auto diag = convergence_diagnostic(u, ApproxBuilder::CaloricToInfinity, w, 2.0,
                                       schedule, {1e-8, 1.0});
    CHECK(diag.verdict == ConvergenceVerdict::Stalling);
    // The gaps approach the nonzero limit (integral of sigma over [1,inf))^((1-p)/p) = 1.
    CHECK(diag.steps.back().gap == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("convergence_diagnostic: truncation of a compactly supported function") {
    auto tent = make_tent(1.0, 3.0, 1.0);
    auto diag = convergence_diagnostic(tent, ApproxBuilder::Truncate, make_power(0.0),
                                       2.0, {4, 8, 16}, {1e-8, 1.0});
    CHECK(diag.verdict == ConvergenceVerdict::Converging);
    for (const auto& step : diag.steps) CHECK(step.gap == doctest::Approx(0.0));
}

TEST_CASE("approximants vanish outside their declared support") {
    auto u = rising_plateau();
    auto res = caloric_extension(u, make_power(0.0), 2.0,
                                 ExtensionSide::TailToInfinity, 1.0, 8.0);
    REQUIRE(res.approximant.derivative_support.has_value());
    const auto [lo, hi] = *res.approximant.derivative_support;
    for (double t : {hi * 1.01, hi * 2.0, hi * 100.0})
        CHECK(res.approximant.derivative(t) == 0.0);

    auto zm = zero_mean_truncation(u, 8);
    const auto [zlo, zhi] = *zm.derivative_support;
    for (double factor : {1.001, 3.0, 50.0}) {
        CHECK(zm.derivative(zhi * factor) == 0.0);
        CHECK(zm.derivative(zlo / factor) == 0.0);
    }
}

TEST_CASE("regime-convergence correspondence for the head-to-zero flow") {
    auto u = falling_head();  // constant 1 on (0, 1), supported head

    SUBCASE("omega = t (sigma = 1/t diverges at 0): the flow converges") {
        auto diag = convergence_diagnostic(u, ApproxBuilder::CaloricToZero,
                                           make_power(1.0), 2.0,
                                           {1, 2, 3, 4, 5, 6, 7, 8}, {1e-8, 0.5});
        CHECK(diag.verdict == ConvergenceVerdict::Converging);
        // gap^2 = 1/(n log 2) exactly.
        for (const auto& step : diag.steps)
            CHECK(step.gap * step.gap ==
                  doctest::Approx(1.0 / (step.index * std::log(2.0))).epsilon(1e-6));
    }

    SUBCASE("omega = t^(1/2) (B_2(0)): the flow stalls at the sharp limit") {
        std::vector<int> schedule = {12, 13, 14, 15, 16, 17, 18, 19, 20};
        auto diag = convergence_diagnostic(u, ApproxBuilder::CaloricToZero,
                                           make_power(0.5), 2.0, schedule,
                                           {1e-8, 0.5});
        CHECK(diag.verdict == ConvergenceVerdict::Stalling);
        // Limit: gap^2 -> (integral of sigma over (0, 1/2])^(1-p) = 1/(2 sqrt(1/2)).
        const double limit_sq = 1.0 / (2.0 * std::sqrt(0.5));
        CHECK(diag.steps.back().gap * diag.steps.back().gap ==
              doctest::Approx(limit_sq).epsilon(5e-3));
    }
}
