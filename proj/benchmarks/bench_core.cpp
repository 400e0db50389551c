#include <benchmark/benchmark.h>

#include <cmath>

#include "dirichlet/classify.hpp"
#include "dirichlet/hardy.hpp"
#include "dirichlet/space.hpp"
#include "dirichlet/varmin.hpp"
#include "dirichlet/weights.hpp"

using namespace dirichlet;

namespace {

WeightProfile strip_hints(WeightProfile w) {
    w.endpoint_hints.reset();
    w.sigma.reset();
    return w;
}

void BM_improper_to_zero_power(benchmark::State& state) {
    const double e = -0.5;
    auto f = [e](double t) { return std::pow(t, e); };
    for (auto _ : state)
        benchmark::DoNotOptimize(quad::improper_to_zero(f, 1.0, 1e-9));
}
BENCHMARK(BM_improper_to_zero_power);

void BM_improper_borderline(benchmark::State& state) {
    auto f = [](double t) { return 1.0 / t; };
    for (auto _ : state)
        benchmark::DoNotOptimize(quad::improper_to_zero(f, 1.0, 1e-9));
}
BENCHMARK(BM_improper_borderline);

void BM_classify_hinted(benchmark::State& state) {
    auto w = make_two_exponent(0.5, 1.5);
    for (auto _ : state) benchmark::DoNotOptimize(density_report(w, 2.0));
}
BENCHMARK(BM_classify_hinted);

void BM_classify_quadrature(benchmark::State& state) {
    auto w = strip_hints(make_two_exponent(0.5, 1.5));
    for (auto _ : state) benchmark::DoNotOptimize(density_report(w, 2.0));
}
BENCHMARK(BM_classify_quadrature);

void BM_discrete_minimizer(benchmark::State& state) {
    MinimizerProblem prob{0.7, 3.1, 1.3, ConstraintSide::LeftConstraint,
                          static_cast<double>(state.range(0)) / 2.0, make_power(0.5)};
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(discrete_minimizer(prob, n));
}
BENCHMARK(BM_discrete_minimizer)->Args({4, 64})->Args({4, 256})->Args({3, 256})->Args({6, 256});

void BM_trace_zero(benchmark::State& state) {
    DirichletFunction u;
    u.anchor = 1.0;
    u.anchor_value = 0.0;
    u.derivative = [](double t) { return std::pow(t, -0.25); };
    auto w = make_power(0.0);
    for (auto _ : state) benchmark::DoNotOptimize(trace_zero(u, w, 2.0, 1e-6));
}
BENCHMARK(BM_trace_zero);

void BM_condition_E1(benchmark::State& state) {
    auto w = make_power(0.0);
    auto h = make_power(-2.0);
    for (auto _ : state) benchmark::DoNotOptimize(condition_C(w, h, 2.0, 2.0));
}
BENCHMARK(BM_condition_E1);

}  // namespace

BENCHMARK_MAIN();
