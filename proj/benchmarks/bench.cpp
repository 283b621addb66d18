#include <benchmark/benchmark.h>

#include "cgof/baselines.hpp"
#include "cgof/distributions.hpp"
#include "cgof/ecf.hpp"
#include "cgof/estimation.hpp"
#include "cgof/montecarlo.hpp"
#include "cgof/statistic.hpp"

using namespace cgof;

namespace {

Sample standardized(std::size_t n) {
    const Sample x = sample(alt::Cauchy{}, n, 42);
    return standardize(x, fit_cauchy_ml(x), ScalingExponent::full);
}

void BM_Vstat(benchmark::State& state) {
    const Sample y = standardized(static_cast<std::size_t>(state.range(0)));
    const int a = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(delta_vstat(y, a, 2.5).delta);
}
BENCHMARK(BM_Vstat)->Args({8, 2})->Args({8, 3})->Args({12, 3})->Args({20, 2})->Args({4, 6});

void BM_Trapezoid(benchmark::State& state) {
    const Sample y = standardized(static_cast<std::size_t>(state.range(0)));
    TestConfig cfg;
    cfg.a = static_cast<double>(state.range(1));
    cfg.method = Method::quadrature;
    for (auto _ : state) benchmark::DoNotOptimize(delta_quadrature(y, cfg).delta);
}
BENCHMARK(BM_Trapezoid)->Args({8, 2})->Args({12, 3})->Args({20, 6})->Args({50, 6})->Args({100, 6});

void BM_GaussHermite(benchmark::State& state) {
    const Sample y = standardized(50);
    TestConfig cfg;
    cfg.method = Method::quadrature;
    cfg.rule = QuadratureRule::gauss_hermite;
    cfg.quad_nodes = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(delta_quadrature(y, cfg).delta);
}
BENCHMARK(BM_GaussHermite)->Arg(64)->Arg(256);

void BM_Ecf(benchmark::State& state) {
    const Sample x = sample(alt::Cauchy{}, static_cast<std::size_t>(state.range(0)), 7);
    double t = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecf_eval(x, t));
        t += 1e-6;
    }
}
BENCHMARK(BM_Ecf)->Arg(50)->Arg(1000);

void BM_Fit(benchmark::State& state) {
    const Sample x = sample(alt::Cauchy{}, static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(fit_cauchy_ml(x).lambda_hat);
}
BENCHMARK(BM_Fit)->Arg(20)->Arg(50)->Arg(1000);

void BM_EdfStatistics(benchmark::State& state) {
    const Sample x = sample(alt::Cauchy{}, 50, 3);
    for (auto _ : state) benchmark::DoNotOptimize(edf_statistics(x).ad);
}
BENCHMARK(BM_EdfStatistics);

void BM_Calibrate(benchmark::State& state) {
    CalibrationSpec spec;
    spec.n = static_cast<std::size_t>(state.range(0));
    spec.reps = 1000;
    for (auto _ : state) benchmark::DoNotOptimize(calibrate(spec).rows.front().critical_value);
}
BENCHMARK(BM_Calibrate)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
