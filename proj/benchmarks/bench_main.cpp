#include "rmtsf/gue/form_factor.hpp"
#include "rmtsf/gue/limits.hpp"
#include "rmtsf/ode/selberg.hpp"
#include "rmtsf/series/analysis.hpp"
#include "rmtsf/structure/coefficients.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace rmtsf;

static void BM_Eliminate(benchmark::State& state) {
    const auto params = ode::specialize_circular(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ode::eliminate(params));
}
BENCHMARK(BM_Eliminate)->Arg(2)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_BulkLimit(benchmark::State& state) {
    const auto op = ode::eliminate(ode::specialize_circular(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(ode::bulk_limit(op));
}
BENCHMARK(BM_BulkLimit)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_AsymptoticSeries(benchmark::State& state) {
    const auto op = ode::circular_bulk_operator(8);
    for (auto _ : state) benchmark::DoNotOptimize(series::asymptotic_nonoscillatory(op, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AsymptoticSeries)->Arg(4)->Arg(7)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_Frobenius(benchmark::State& state) {
    const auto op = ode::circular_bulk_operator(6);
    for (auto _ : state) benchmark::DoNotOptimize(series::frobenius(op, Rational(6), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Frobenius)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_SolveK10(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(structure::solve_k10());
}
BENCHMARK(BM_SolveK10)->Unit(benchmark::kMillisecond);

static void BM_Sbar(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double k = 2.0 * std::sqrt(2.0 * n) * 0.5;
    for (auto _ : state) benchmark::DoNotOptimize(gue::sbar(n, k));
}
BENCHMARK(BM_Sbar)->Arg(8)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_CovPhase(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gue::cov_phase(n, {1.3, 0.2}, {0.9, -0.2}));
}
BENCHMARK(BM_CovPhase)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_SoftCovQuadrature(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gue::soft_cov_quadrature(0.7, 1.6));
}
BENCHMARK(BM_SoftCovQuadrature)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
