#include <benchmark/benchmark.h>

#include "rleacs/acs.hpp"
#include "rleacs/corpus.hpp"

using namespace rleacs;

namespace {

// range(0): runs per sequence, range(1): run-length scale.
void BM_EngineBuild(benchmark::State& state) {
    const auto [x, y] = bench_pair(static_cast<std::size_t>(state.range(0)), static_cast<std::uint64_t>(state.range(1)), 7);
    for (auto _ : state) {
        AcsEngine engine(x, y);
        benchmark::DoNotOptimize(engine.total_runs());
    }
    state.SetComplexityN(state.range(0));
}

void BM_Query(benchmark::State& state) {
    const auto [x, y] = bench_pair(static_cast<std::size_t>(state.range(0)), static_cast<std::uint64_t>(state.range(1)), 7);
    const AcsEngine engine(x, y);
    for (auto _ : state) benchmark::DoNotOptimize(engine.acs().lsum);
    state.SetComplexityN(state.range(0));
}

void BM_AcsEndToEnd(benchmark::State& state) {
    const auto [x, y] = bench_pair(static_cast<std::size_t>(state.range(0)), static_cast<std::uint64_t>(state.range(1)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(acs(x, y).lsum);
    state.SetComplexityN(state.range(0));
    state.counters["decoded"] = static_cast<double>(x.text_length() + y.text_length());
}

void BM_Dist(benchmark::State& state) {
    const auto [x, y] = bench_pair(static_cast<std::size_t>(state.range(0)), 10, 7);
    for (auto _ : state) benchmark::DoNotOptimize(dist(x, y).dist);
}

void sizes(benchmark::internal::Benchmark* b) {
    for (const std::int64_t scale : {10, 1'000'000})
        for (std::int64_t runs = 1 << 13; runs <= 1 << 16; runs <<= 1) b->Args({runs, scale});
}

}  // namespace

BENCHMARK(BM_EngineBuild)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Query)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AcsEndToEnd)
    ->ArgsProduct({{50'000}, {10, 1'000, 1'000'000}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AcsEndToEnd)
    ->RangeMultiplier(2)
    ->Ranges({{1 << 13, 1 << 16}, {10, 10}})
    ->Complexity(benchmark::oNLogN)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dist)->Arg(1 << 12)->Arg(1 << 15)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
