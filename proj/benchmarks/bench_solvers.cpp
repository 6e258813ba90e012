#include <benchmark/benchmark.h>

#include <complex>

#include "annulus/hadamard.hpp"
#include "annulus/kernels.hpp"
#include "annulus/oracle.hpp"
#include "annulus/quadrature.hpp"

using namespace annulus;

namespace {

CauchyData sample_data(int degree) {
    std::vector<double> a(static_cast<std::size_t>(degree)), b(a.size());
    for (int n = 1; n <= degree; ++n) {
        a[static_cast<std::size_t>(n - 1)] = 1.0 / n;
        b[static_cast<std::size_t>(n - 1)] = 0.5 / (n * n);
    }
    return {TrigSeries(0.3, a, b), TrigSeries(0.1, b, a)};
}

void BM_GaussLaguerre(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gauss_laguerre(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GaussLaguerre)->Arg(16)->Arg(64);

void BM_Reconstruct(benchmark::State& state) {
    const LaurentPoly f(-6, std::vector<Complex>(13, Complex(1.0, -0.5)));
    const auto data = AnalyticBoundary::sample(f, 1.0, 0.3, 128);
    const Annulus ring(0.3);
    const QuadratureSpec spec{16, 128};
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct_analytic(data, Complex(0.4, 0.3), ring, spec));
}
BENCHMARK(BM_Reconstruct);

void BM_Theorem1(benchmark::State& state) {
    const auto data = sample_data(static_cast<int>(state.range(0)));
    const QuadratureSpec spec;
    for (auto _ : state) benchmark::DoNotOptimize(solve_theorem1(data.g, {0.5, 0.7}, spec));
}
BENCHMARK(BM_Theorem1)->Arg(4)->Arg(24);

void BM_Theorem2Quadrature(benchmark::State& state) {
    const auto data = sample_data(static_cast<int>(state.range(0)));
    QuadratureSpec spec;
    spec.lambda_cutoff = lambda_cutoff_rule(static_cast<int>(state.range(0)), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(solve_theorem2_quadrature(data.h, {0.5, 0.7}, spec));
}
BENCHMARK(BM_Theorem2Quadrature)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OracleField(benchmark::State& state) {
    const auto data = sample_data(static_cast<int>(state.range(0)));
    const Annulus ring(0.25);
    const auto grid = PolarGrid::interior(0.25, 32, 128);
    for (auto _ : state) benchmark::DoNotOptimize(solve_cauchy_oracle(data, ring, grid));
}
BENCHMARK(BM_OracleField)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_InstabilityTable(benchmark::State& state) {
    std::vector<int> modes;
    for (int n = 5; n <= 45; n += 2) modes.push_back(n);
    const Annulus ring(0.25);
    for (auto _ : state) {
        benchmark::DoNotOptimize(instability_table(modes, SobolevOrder(2), 0.5, HadamardSolver::oracle, ring));
    }
}
BENCHMARK(BM_InstabilityTable)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
