#include <benchmark/benchmark.h>

#include "nhf/corank_engine.hpp"
#include "nhf/metrics.hpp"
#include "nhf/models.hpp"

using namespace nhf;

static void BM_BuildRoots(benchmark::State& state) {
    auto type = static_cast<TypeLabel>(state.range(0));
    int rank = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto rs = RootSystem::build(type, rank);
        benchmark::DoNotOptimize(rs);
    }
}
BENCHMARK(BM_BuildRoots)
    ->Args({static_cast<int>(TypeLabel::F), 4})
    ->Args({static_cast<int>(TypeLabel::E), 7});

static void BM_ClosedSubsystems(benchmark::State& state) {
    RootSystem rs = RootSystem::build(TypeLabel::B, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto classes = closed_subsystems(rs);
        benchmark::DoNotOptimize(classes);
    }
}
BENCHMARK(BM_ClosedSubsystems)->Arg(3)->Arg(4);

static void BM_Saturate(benchmark::State& state) {
    RootSystem f4 = RootSystem::build(TypeLabel::F, 4);
    auto seeds = enumerate_seeds(f4);
    for (auto _ : state) {
        for (const auto& seed : seeds) {
            if (seed.kind == SeedKind::CaseI) continue;
            CaseState st = init_case(f4, seed);
            auto v = saturate(st);
            benchmark::DoNotOptimize(v);
        }
    }
}
BENCHMARK(BM_Saturate);

static void BM_Charpoly(benchmark::State& state) {
    CMatrix v = model_family_vt("spin9-vt-family", Rational::of(1, 2));
    for (auto _ : state) {
        auto seq = eigenvalue_sequence(v);
        benchmark::DoNotOptimize(seq);
    }
}
BENCHMARK(BM_Charpoly);

static void BM_FlagCurvature(benchmark::State& state) {
    ChartMetric M = make_metric("sphere2");
    VecD x(2), y(2), v(2);
    x << 1.1, 0.4;
    y << 0.6, 0.5;
    v << -0.4, 0.8;
    for (auto _ : state) {
        double k = flag_curvature(M, x, y, v);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_FlagCurvature);

BENCHMARK_MAIN();
