#include <benchmark/benchmark.h>

#include "qhj/scenario.hpp"
#include "qhj/trajectory.hpp"

using qhj::cplx;

static void BM_Integrate(benchmark::State& state) {
    auto sup = qhj::preset_case1().superposition();
    const double tol = std::pow(10.0, -state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            qhj::integrate(sup, qhj::TrajectoryKind::quantum,
                           cplx(-9.11016, -1.17309), 0.0, 10.0, tol));
}
BENCHMARK(BM_Integrate)->Arg(6)->Arg(9)->Arg(11);

static void BM_DenseEval(benchmark::State& state) {
    auto sup = qhj::preset_case1().superposition();
    auto tr = qhj::integrate(sup, qhj::TrajectoryKind::quantum,
                             cplx(-9.11016, -1.17309), 0.0, 10.0, 1e-9);
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tr.at(t));
        t += 0.001;
        if (t > 10.0) t = 0.0;
    }
}
BENCHMARK(BM_DenseEval);

BENCHMARK_MAIN();
