#include <benchmark/benchmark.h>

#include "bcmc/joint_chain.hpp"
#include "bcmc/single_chain.hpp"
#include "bcmc/testkit/generators.hpp"

namespace {

bcmc::Graph random_graph(std::size_t n, std::uint64_t seed) {
    bcmc::testkit::GeneratorSpec spec;
    spec.family = bcmc::testkit::GraphFamily::gnp;
    spec.n = n;
    spec.p = 8.0 / static_cast<double>(n);
    spec.seed = seed;
    return bcmc::testkit::generate(spec);
}

// Chain throughput including lazy dependency evaluation; the memo means the
// per-step cost decays to RNG + hash lookups once the support is explored.
void BM_SingleChain(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const bcmc::Graph g = random_graph(n, 11);
    bcmc::ChainConfig cfg;
    cfg.target = 1;
    cfg.iterations = 20000;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = ++seed;
        benchmark::DoNotOptimize(bcmc::run_chain(g, cfg));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * cfg.iterations);
}
BENCHMARK(BM_SingleChain)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_JointChain(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const bcmc::Graph g = random_graph(n, 12);
    const bcmc::Vertex targets[] = {0, 1, 2};
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bcmc::run_joint_chain(g, targets, 20000, ++seed));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 20000);
}
BENCHMARK(BM_JointChain)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_EstimatePlanning(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const bcmc::Graph g = random_graph(n, 13);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bcmc::mu_exact(g, 1));
    }
}
BENCHMARK(BM_EstimatePlanning)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
