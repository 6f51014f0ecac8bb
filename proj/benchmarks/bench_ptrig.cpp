#include <benchmark/benchmark.h>

#include <complex>

#include "ptrig/gentrig.hpp"
#include "ptrig/hyperseries.hpp"
#include "ptrig/numerics.hpp"
#include "ptrig/polysolve.hpp"
#include "ptrig/special_core.hpp"

using namespace ptrig;

static void BM_CosP(benchmark::State& state) {
    double phi = -10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cos_p(phi));
        phi += 1e-3;
        if (phi > 10.0) phi = -10.0;
    }
}
BENCHMARK(BM_CosP);

static void BM_ChebyshevRadical(benchmark::State& state) {
    std::complex<double> a(1.3, -0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chebyshev_radical(a));
        a += std::complex<double>(1e-4, 2e-4);
        if (std::abs(a) > 10.0) a = std::complex<double>(1.3, -0.4);
    }
}
BENCHMARK(BM_ChebyshevRadical);

static void BM_CosPSeries(benchmark::State& state) {
    ToleranceConfig cfg;
    cfg.max_terms = 5000;
    for (auto _ : state)
        benchmark::DoNotOptimize(cos_p_series(1.1, cfg));
}
BENCHMARK(BM_CosPSeries);

static void BM_CosM(benchmark::State& state) {
    ToleranceConfig cfg;
    double phi = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cos_m(phi, cfg));
        phi += 1e-3;
        if (phi > 4.0) phi = 0.0;
    }
}
BENCHMARK(BM_CosM);

static void BM_BringRoot(benchmark::State& state) {
    ToleranceConfig cfg;
    cfg.max_terms = 5000;
    double t = -2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bring_root(t, cfg));
        t += 1e-3;
        if (t > 2.0) t = -2.0;
    }
}
BENCHMARK(BM_BringRoot);

static void BM_SolveCubic(benchmark::State& state) {
    ToleranceConfig cfg;
    double a = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_cubic({a, 2.5, -1.25}, cfg));
        a += 1e-3;
        if (a > 3.0) a = -3.0;
    }
}
BENCHMARK(BM_SolveCubic);

static void BM_SolveQuinticTrinomial(benchmark::State& state) {
    ToleranceConfig cfg;
    cfg.max_terms = 5000;
    double p = -3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_quintic_trinomial({p, 1.7}, cfg));
        p += 1e-2;
        if (p > 3.0) p = -3.0;
    }
}
BENCHMARK(BM_SolveQuinticTrinomial);

static void BM_AllRootsQuintic(benchmark::State& state) {
    ToleranceConfig cfg;
    const std::vector<double> coeffs = {1.7, -3.0, 0.0, 0.0, 0.0, 1.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(all_roots(coeffs, cfg));
}
BENCHMARK(BM_AllRootsQuintic);

static void BM_AdaptiveQuadCircle(benchmark::State& state) {
    auto f = [](double x) { return std::sqrt(1.0 - x * x); };
    for (auto _ : state)
        benchmark::DoNotOptimize(adaptive_quad(f, Interval(-1.0, 1.0), 1e-10));
}
BENCHMARK(BM_AdaptiveQuadCircle);

static void BM_GenPoint(benchmark::State& state) {
    ToleranceConfig cfg;
    const GenTrigParams fam{static_cast<int>(state.range(0)),
                            static_cast<int>(state.range(1))};
    const double phi = 0.4 * gen_phi_max(fam, cfg);
    for (auto _ : state)
        benchmark::DoNotOptimize(gen_point(fam, phi, cfg));
}
BENCHMARK(BM_GenPoint)->Args({2, 2})->Args({2, 1})->Args({4, 1});

BENCHMARK_MAIN();
