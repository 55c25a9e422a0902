#include <benchmark/benchmark.h>

#include "dgspec/formats.hpp"
#include "dgspec/graph.hpp"

namespace {

using namespace dgspec;

void BM_ExtendedDoubleCover(benchmark::State& state) {
    const Graph g = hypercube(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(extended_double_cover(g));
}
BENCHMARK(BM_ExtendedDoubleCover)->DenseRange(4, 10, 2);

void BM_KFold(benchmark::State& state) {
    const Graph g = cycle_graph(256);
    for (auto _ : state) benchmark::DoNotOptimize(k_fold(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_KFold)->RangeMultiplier(2)->Range(2, 16);

void BM_LineGraph(benchmark::State& state) {
    const Graph g = complete_graph(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(line_graph(g));
}
BENCHMARK(BM_LineGraph)->RangeMultiplier(2)->Range(8, 64);

void BM_Graph6RoundTrip(benchmark::State& state) {
    const Graph g = complete_bipartite(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(to_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->RangeMultiplier(4)->Range(4, 256);

}  // namespace
