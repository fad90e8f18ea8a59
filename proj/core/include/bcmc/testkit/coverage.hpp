#ifndef BCMC_TESTKIT_COVERAGE_HPP
#define BCMC_TESTKIT_COVERAGE_HPP

#include <cstdint>
#include <span>

#include "bcmc/graph.hpp"

namespace bcmc::testkit {

/// Outcome of a replicated estimation experiment: how often independently
/// seeded runs landed within epsilon of the exact value.
struct CoverageResult {
    std::uint64_t runs = 0;
    std::uint64_t within = 0;
    double fraction_within = 0.0;
    double epsilon = 0.0;
    double delta = 0.0;
    double mu = 0.0;
    std::uint64_t planned_samples = 0;      // chain length T, or stratum size for joint runs
    std::uint64_t planned_iterations = 0;   // total T actually run per replica
    double exact_value = 0.0;
    double mean_achieved_stratum = 0.0;     // joint runs only
};

/// Runs `runs` single-space chains with T = required_samples(eps, delta,
/// mu_exact) and per-run seeds base_seed xor run index; counts runs whose
/// estimate lies within eps of the exact betweenness. Replicas execute
/// concurrently; the result does not depend on scheduling.
CoverageResult single_coverage_experiment(const Graph& g, Vertex r, double epsilon, double delta,
                                          std::uint64_t runs, std::uint64_t base_seed);

/// Same protocol for the joint sampler: the stratum budget |M(j)| comes from
/// required_samples_joint with mu_exact(r_j), the total iteration count from
/// planned_total_iterations, and each run compares the directional relative
/// estimate of r_i given r_j against the exact relative betweenness. Runs
/// with an empty stratum count as misses.
CoverageResult joint_coverage_experiment(const Graph& g, std::span<const Vertex> targets, Vertex r_i,
                                         Vertex r_j, double epsilon, double delta, std::uint64_t runs,
                                         std::uint64_t base_seed);

}  // namespace bcmc::testkit

#endif  // BCMC_TESTKIT_COVERAGE_HPP
