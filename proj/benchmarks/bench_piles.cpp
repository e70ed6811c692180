#include <benchmark/benchmark.h>

#include "piles/counting.hpp"
#include "piles/generate.hpp"
#include "piles/ipm.hpp"
#include "piles/sample.hpp"

using namespace piles;

// Exhaustive generation of one fiber; items = configurations emitted.
static void BM_GenerateFiber(benchmark::State& state) {
    const long long n = state.range(0);
    long long w = static_cast<long long>(std::sqrt(2.0 * static_cast<double>(n)));
    while (w * (w + 1) > 2 * n) --w;
    w = std::max<long long>(1, 2 * w / 3);  // a bulky middle fiber
    std::uint64_t emitted = 0;
    for (auto _ : state) {
        GenStats stats;
        generate_spm_width(n, w, [](const Configuration&) {}, &stats);
        emitted += stats.yields;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(emitted));
}
BENCHMARK(BM_GenerateFiber)->Arg(60)->Arg(90)->Arg(120)->Unit(benchmark::kMillisecond);

// The pull-based stream over the same fiber.
static void BM_StreamFiber(benchmark::State& state) {
    const long long n = state.range(0);
    long long w = static_cast<long long>(std::sqrt(2.0 * static_cast<double>(n)));
    while (w * (w + 1) > 2 * n) --w;
    w = std::max<long long>(1, 2 * w / 3);
    std::uint64_t emitted = 0;
    for (auto _ : state) {
        ReducedFormStream stream(n - w * (w + 1) / 2, w);
        while (stream.advance()) ++emitted;
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(emitted));
}
BENCHMARK(BM_StreamFiber)->Arg(60)->Arg(90)->Arg(120)->Unit(benchmark::kMillisecond);

// Building the count table from scratch.
static void BM_CountTable(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) {
        CountTable table(n);
        benchmark::DoNotOptimize(table.count_spm(n));
    }
}
BENCHMARK(BM_CountTable)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

// One uniform sample from a prepared table.
static void BM_UniformSample(benchmark::State& state) {
    const long long n = state.range(0);
    CountTable table(n);
    table.prepare(n);
    SpmSampler sampler(table, 1234);
    for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(n));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_UniformSample)->Arg(100)->Arg(400)->Unit(benchmark::kMicrosecond);

// Ice pile counting, fresh table per iteration.
static void BM_IpmCount(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(ipm_count(n, 3));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_IpmCount)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
