#include <benchmark/benchmark.h>

#include "tau_atlas/gamma.hpp"
#include "tau_atlas/homological.hpp"

using namespace tau_atlas;

static void BM_BuildAuslander(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_auslander(n));
}
BENCHMARK(BM_BuildAuslander)->DenseRange(2, 6);

static void BM_TiltEnumerate(benchmark::State& state) {
    auto a = build_auslander(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tilt_enumerate(a));
}
BENCHMARK(BM_TiltEnumerate)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_TiltHasse(benchmark::State& state) {
    auto cat = tilt_enumerate(build_auslander(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(tilt_hasse(cat));
}
BENCHMARK(BM_TiltHasse)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_SttContext(benchmark::State& state) {
    auto a = build_auslander(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        SttContext ctx(a);
        benchmark::DoNotOptimize(ctx.registry().size());
    }
}
BENCHMARK(BM_SttContext)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

// args: n, threads
static void BM_SttEnumerate(benchmark::State& state) {
    SttContext ctx(build_auslander(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_stt(ctx, static_cast<unsigned>(state.range(1))));
}
BENCHMARK(BM_SttEnumerate)->Args({3, 1})->Args({4, 1})->Args({4, 4})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

static void BM_HomDim(benchmark::State& state) {
    auto a = build_auslander(static_cast<int>(state.range(0)));
    Module x = regular_module(a);
    for (auto _ : state) benchmark::DoNotOptimize(hom_dim(x, x));
}
BENCHMARK(BM_HomDim)->DenseRange(2, 5);

static void BM_TauRigid(benchmark::State& state) {
    SttContext ctx(build_auslander(static_cast<int>(state.range(0))));
    Module t = ctx.module(ctx.top_pair());
    for (auto _ : state) benchmark::DoNotOptimize(is_tau_rigid(t));
}
BENCHMARK(BM_TauRigid)->DenseRange(2, 4);

static void BM_GammaBridge(benchmark::State& state) {
    SttContext ctx(build_auslander(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        GammaBridge b(ctx);
        benchmark::DoNotOptimize(b.registry().size());
    }
}
BENCHMARK(BM_GammaBridge)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
