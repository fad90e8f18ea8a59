#include "bcmc/testkit/coverage.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <thread>
#include <vector>

#include "bcmc/joint_chain.hpp"
#include "bcmc/single_chain.hpp"

namespace bcmc::testkit {

namespace {

void run_replicas(std::uint64_t runs, const std::function<void(std::uint64_t)>& body) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(hw, runs);
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < runs; ++i) body(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::uint64_t i = next.fetch_add(1); i < runs; i = next.fetch_add(1)) body(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace

CoverageResult single_coverage_experiment(const Graph& g, Vertex r, double epsilon, double delta,
                                          std::uint64_t runs, std::uint64_t base_seed) {
    if (runs == 0) throw InvalidParameterError("runs must be >= 1");

    CoverageResult result;
    result.runs = runs;
    result.epsilon = epsilon;
    result.delta = delta;
    result.mu = mu_exact(g, r).mu;
    result.planned_samples = required_samples(epsilon, delta, result.mu);
    result.planned_iterations = result.planned_samples;
    result.exact_value = exact_betweenness_single(g, r);

    std::vector<char> hit(runs, 0);
    run_replicas(runs, [&](std::uint64_t i) {
        ChainConfig cfg;
        cfg.target = r;
        cfg.iterations = result.planned_samples;
        cfg.seed = base_seed ^ i;  // per-replica stream
        const ChainTrace trace = run_chain(g, cfg);
        const double estimate = estimate_betweenness(trace, g);
        hit[i] = std::abs(estimate - result.exact_value) <= epsilon ? 1 : 0;
    });
    for (char h : hit) result.within += h;
    result.fraction_within = static_cast<double>(result.within) / static_cast<double>(runs);
    return result;
}

CoverageResult joint_coverage_experiment(const Graph& g, std::span<const Vertex> targets, Vertex r_i,
                                         Vertex r_j, double epsilon, double delta, std::uint64_t runs,
                                         std::uint64_t base_seed) {
    if (runs == 0) throw InvalidParameterError("runs must be >= 1");

    CoverageResult result;
    result.runs = runs;
    result.epsilon = epsilon;
    result.delta = delta;
    result.mu = mu_exact(g, r_j).mu;
    result.planned_samples = required_samples_joint(epsilon, delta, result.mu);
    result.planned_iterations = planned_total_iterations(g, targets, r_j, result.planned_samples);
    result.exact_value = relative_betweenness(g, r_i, r_j);

    std::vector<char> hit(runs, 0);
    std::vector<std::uint64_t> achieved(runs, 0);
    run_replicas(runs, [&](std::uint64_t i) {
        const JointChainTrace trace = run_joint_chain(g, targets, result.planned_iterations, base_seed ^ i);
        achieved[i] = trace.strata[trace.stratum_index(r_j)].size();
        try {
            const double estimate = estimate_relative_betweenness(trace, r_i, r_j);
            hit[i] = std::abs(estimate - result.exact_value) <= epsilon ? 1 : 0;
        } catch (const EmptyStratumError&) {
            hit[i] = 0;
        }
    });
    double stratum_total = 0.0;
    for (std::uint64_t i = 0; i < runs; ++i) {
        result.within += hit[i];
        stratum_total += static_cast<double>(achieved[i]);
    }
    result.fraction_within = static_cast<double>(result.within) / static_cast<double>(runs);
    result.mean_achieved_stratum = stratum_total / static_cast<double>(runs);
    return result;
}

}  // namespace bcmc::testkit
