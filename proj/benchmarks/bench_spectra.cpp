#include <benchmark/benchmark.h>

#include <random>

#include "dgspec/spectra.hpp"
#include "dgspec/theorems.hpp"

namespace {

using namespace dgspec;

Graph random_graph(std::size_t n, double q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(q);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

void BM_LaplacianSpectrum(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_of(g, MatrixKind::laplacian));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LaplacianSpectrum)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNCubed);

void BM_SpanningTreesExact(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(spanning_trees_exact(g));
}
BENCHMARK(BM_SpanningTreesExact)->RangeMultiplier(2)->Range(8, 128);

void BM_SpanningTreesEigen(benchmark::State& state) {
    const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(spanning_trees_eigen(g));
}
BENCHMARK(BM_SpanningTreesEigen)->RangeMultiplier(2)->Range(8, 128);

// Closed-form prediction against building and diagonalizing the cover.
void BM_IteratedCoverPredicted(benchmark::State& state) {
    const Graph g = random_graph(16, 0.3, 3);
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(predict_iterated_edc_l_spectrum(g, k));
}
BENCHMARK(BM_IteratedCoverPredicted)->DenseRange(1, 5);

void BM_IteratedCoverDirect(benchmark::State& state) {
    const Graph g = random_graph(16, 0.3, 3);
    const auto k = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_of(iterated_edc(g, k), MatrixKind::laplacian));
}
BENCHMARK(BM_IteratedCoverDirect)->DenseRange(1, 5);

}  // namespace

BENCHMARK_MAIN();
