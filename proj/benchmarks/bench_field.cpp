#include <benchmark/benchmark.h>

#include "qhj/scenario.hpp"
#include "qhj/wavefield.hpp"

using qhj::cplx;

static void BM_SuperpositionValue(benchmark::State& state) {
    auto sup = qhj::preset_case1().superposition();
    cplx z(0.7, -0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sup.value(z, 5.0));
        z += cplx(1e-9, 0.0);
    }
}
BENCHMARK(BM_SuperpositionValue);

static void BM_Qmf(benchmark::State& state) {
    auto sup = qhj::preset_case1().superposition();
    const double scale = qhj::psi_scale(sup, 5.0);
    cplx z(0.7, -0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qhj::qmf(sup, z, 5.0, scale));
        z += cplx(1e-9, 0.0);
    }
}
BENCHMARK(BM_Qmf);

static void BM_SampleField(benchmark::State& state) {
    auto sup = qhj::preset_case1().superposition();
    const double scale = qhj::psi_scale(sup, 5.0);
    cplx z(0.7, -0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qhj::sample_field(sup, z, 5.0, scale));
        z += cplx(1e-9, 0.0);
    }
}
BENCHMARK(BM_SampleField);

BENCHMARK_MAIN();
