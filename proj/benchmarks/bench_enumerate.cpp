#include <benchmark/benchmark.h>

#include "mcds/analysis.hpp"
#include "mcds/enumerator.hpp"
#include "mcds/generators.hpp"
#include "mcds/oracle.hpp"

namespace {

void BM_EnumerateLowerBound(benchmark::State& state) {
    const auto g = mcds::lower_bound_graph({static_cast<int>(state.range(0))});
    std::size_t count = 0;
    for (auto _ : state) {
        auto res = mcds::enumerate_mcds(g);
        count = res.solutions.size();
        benchmark::DoNotOptimize(res);
    }
    state.counters["n"] = g.n();
    state.counters["solutions"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateLowerBound)->DenseRange(3, 11, 2)->Unit(benchmark::kMillisecond);

void BM_EnumerateLowerBoundThreads(benchmark::State& state) {
    const auto g = mcds::lower_bound_graph({11});
    mcds::EnumOptions o;
    o.threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mcds::enumerate_mcds(g, o));
}
BENCHMARK(BM_EnumerateLowerBoundThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_EnumerateRandom(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    std::vector<mcds::ConvexBipartiteGraph> graphs;
    for (std::uint64_t seed = 0; seed < 32; ++seed) graphs.push_back(mcds::random_convex_graph({side, side, seed}));
    for (auto _ : state)
        for (const auto& g : graphs) benchmark::DoNotOptimize(mcds::enumerate_mcds(g));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}
BENCHMARK(BM_EnumerateRandom)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_OracleRandom(benchmark::State& state) {
    const int side = static_cast<int>(state.range(0));
    const auto g = mcds::random_convex_graph({side, side, 1});
    for (auto _ : state) benchmark::DoNotOptimize(mcds::enumerate_mcds_bruteforce(g));
}
BENCHMARK(BM_OracleRandom)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BranchingNumber(benchmark::State& state) {
    const auto vectors = mcds::algorithm_vectors(12);
    for (auto _ : state)
        for (const auto& v : vectors) benchmark::DoNotOptimize(mcds::branching_number(v));
}
BENCHMARK(BM_BranchingNumber);

}  // namespace

BENCHMARK_MAIN();
