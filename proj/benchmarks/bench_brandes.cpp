#include <benchmark/benchmark.h>

#include "bcmc/brandes.hpp"
#include "bcmc/shortest_paths.hpp"
#include "bcmc/testkit/generators.hpp"

namespace {

bcmc::Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    bcmc::testkit::GeneratorSpec spec;
    spec.family = bcmc::testkit::GraphFamily::gnp;
    spec.n = n;
    spec.p = p;
    spec.seed = seed;
    return bcmc::testkit::generate(spec);
}

void BM_ShortestPathDag(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const bcmc::Graph g = random_graph(n, 8.0 / static_cast<double>(n), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bcmc::shortest_path_dag(g, 0));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * g.edge_count());
}
BENCHMARK(BM_ShortestPathDag)->Arg(256)->Arg(1024)->Arg(4096);

void BM_DependencyAccumulation(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const bcmc::Graph g = random_graph(n, 8.0 / static_cast<double>(n), 4);
    bcmc::DependencyWorkspace ws;
    bcmc::Vertex s = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ws.compute(g, s));
        s = (s + 1) % g.vertex_count();
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * g.edge_count());
}
BENCHMARK(BM_DependencyAccumulation)->Arg(256)->Arg(1024)->Arg(4096);

void BM_ExactBetweenness(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const bcmc::Graph g = random_graph(n, 8.0 / static_cast<double>(n), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bcmc::exact_betweenness(g));
    }
}
BENCHMARK(BM_ExactBetweenness)->Arg(128)->Arg(512);

}  // namespace
