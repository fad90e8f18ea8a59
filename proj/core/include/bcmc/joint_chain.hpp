#ifndef BCMC_JOINT_CHAIN_HPP
#define BCMC_JOINT_CHAIN_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bcmc/brandes.hpp"
#include "bcmc/graph.hpp"

namespace bcmc {

/// State of the joint sampler: a target from the comparison set paired with a
/// source vertex from V(G).
struct JointState {
    Vertex target;
    Vertex source;

    bool operator==(const JointState&) const = default;
};

/// One realized joint chain. Strata partition the full state sequence by
/// target (the start state included), so stratum sizes sum to T+1.
struct JointChainTrace {
    std::vector<Vertex> target_set;          // R, in caller order
    std::size_t vertex_count = 0;
    std::vector<JointState> states;          // s_0..s_T
    std::vector<bool> step_accepted;         // size T
    std::uint64_t accepted = 0;
    std::vector<std::vector<Vertex>> strata; // source components per target, aligned with target_set
    std::unordered_map<std::uint64_t, double> dependency;  // key(target, source) -> score

    static std::uint64_t key(Vertex target, Vertex source) {
        return (static_cast<std::uint64_t>(target) << 32) | source;
    }
    /// Memoized delta_source(target); throws if the pair was never cached.
    double dependency_at(Vertex target, Vertex source) const;
    /// Index of a target within target_set; throws if absent.
    std::size_t stratum_index(Vertex target) const;
};

/// Both relative scores of a pair and their ratio, from one chain run.
/// nullopt marks an unestimable direction (empty stratum) or an undefined
/// ratio (zero denominator).
struct RelativeScoreReport {
    Vertex r_i = 0;
    Vertex r_j = 0;
    std::uint64_t samples_i = 0;  // |M(i)|
    std::uint64_t samples_j = 0;  // |M(j)|
    std::optional<double> rel_ij; // estimate of the relative score of r_i given r_j
    std::optional<double> rel_ji;
    std::optional<double> ratio;  // rel_ij / rel_ji
};

/// Independence Metropolis-Hastings over R x V(G): the start pair and every
/// proposal draw the target uniformly from R and the source uniformly from
/// V(G), independently; acceptance is min{1, delta'/delta} with the
/// capped_ratio zero conventions. After the run the trace holds dependency
/// scores for every visited source against every target in R, so estimators
/// need no further graph access.
///
/// Throws AllZeroDependencyError when every target in R is traffic-free, and
/// InvalidParameterError for |R| < 2, duplicate or out-of-range targets, or
/// iterations == 0.
JointChainTrace run_joint_chain(const Graph& g, std::span<const Vertex> targets,
                                std::uint64_t iterations, std::uint64_t seed);

/// Stratum average of min{1, delta_v(r_i)/delta_v(r_j)} over the sources
/// sampled with target r_j. Throws EmptyStratumError when that stratum is
/// empty (unestimable, not zero).
double estimate_relative_betweenness(const JointChainTrace& trace, Vertex r_i, Vertex r_j);

/// Ratio of the two directional relative estimates; a consistent estimator of
/// BC(r_i)/BC(r_j). Throws EmptyStratumError or ZeroDenominatorError.
double estimate_betweenness_ratio(const JointChainTrace& trace, Vertex r_i, Vertex r_j);

/// Exact relative betweenness of r_i given r_j: the plain average over all
/// sources v of min{1, delta_v(r_i)/delta_v(r_j)}. Costs n dependency
/// accumulations.
double relative_betweenness(const Graph& g, Vertex r_i, Vertex r_j);

/// Expected value of min{1, delta_v(r_i)/delta_v(r_j)} when v is drawn
/// proportionally to delta_v(r_j): sum_v min(delta_i, delta_j) / sum_v
/// delta_j. This is the limit of estimate_relative_betweenness, and the
/// ratio of the two directions equals the betweenness ratio exactly.
double stationary_relative_mean(const Graph& g, Vertex r_i, Vertex r_j);

/// (lhs, rhs) with lhs = BC(r_i)/BC(r_j) from exact betweenness and rhs the
/// ratio of the stationary relative means; equal up to rounding. Throws
/// InvalidParameterError when either betweenness is zero or the dependency
/// supports are disjoint (the ratio degenerates to 0/0).
std::pair<double, double> betweenness_ratio_identity(const Graph& g, Vertex r_i, Vertex r_j);

/// Same budget formula as the single-space planner, read as the required
/// stratum size |M(j)|.
std::uint64_t required_samples_joint(double epsilon, double delta, double mu_j);

/// Total iterations expected to land stratum_size samples on target r_j,
/// from the exact dependency masses: stratum_size * (sum over R x V of
/// delta) / (sum_v delta_v(r_j)). Planning/verification helper; costs
/// |R| * n accumulations.
std::uint64_t planned_total_iterations(const Graph& g, std::span<const Vertex> targets,
                                       Vertex r_j, std::uint64_t stratum_size);

/// Assembles both directions and the ratio for one pair, mapping empty-stratum
/// and zero-denominator conditions to nullopt instead of throwing.
RelativeScoreReport relative_report(const JointChainTrace& trace, Vertex r_i, Vertex r_j);

}  // namespace bcmc

#endif  // BCMC_JOINT_CHAIN_HPP
