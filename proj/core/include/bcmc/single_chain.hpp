#ifndef BCMC_SINGLE_CHAIN_HPP
#define BCMC_SINGLE_CHAIN_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bcmc/brandes.hpp"
#include "bcmc/graph.hpp"

namespace bcmc {

/// Parameters of one single-space chain run targeting vertex `target`.
/// The chain has iterations+1 states including the start state.
struct ChainConfig {
    Vertex target = 0;
    std::uint64_t iterations = 0;  // must be >= 1
    std::uint64_t seed = 0;
    std::optional<double> epsilon;  // planning only; > 0 when present
    std::optional<double> delta;    // planning only; in (0, 1) when present
};

/// One realized chain over source vertices. Rejected proposals repeat the
/// current state in `states`; step_accepted[t] records whether step t+1 moved.
struct ChainTrace {
    Vertex target = 0;
    std::size_t vertex_count = 0;
    std::vector<Vertex> states;        // x_0..x_T
    std::vector<bool> step_accepted;   // size T
    std::uint64_t accepted = 0;
    std::unordered_map<Vertex, double> dependency;  // v -> delta_v(target), every state and proposal
};

/// Max-to-mean dependency concentration on a target; governs how many samples
/// the chain needs. mu = n * max_v delta_v(r) / sum_v delta_v(r), always in
/// [1, n]; mean_score is the plain average of the dependency scores.
struct MuBound {
    double mu = 1.0;
    Vertex argmax_vertex = 0;
    double mean_score = 0.0;
};

/// Independence Metropolis-Hastings over V(G): uniform start, uniform
/// proposals, acceptance min{1, delta_proposed / delta_current} with the
/// capped_ratio zero conventions. Dependencies are computed lazily, one O(|E|)
/// accumulation per distinct vertex, and memoized in the trace.
///
/// Throws AllZeroDependencyError when no vertex has positive dependency on the
/// target (the target carries no shortest-path traffic; its betweenness is
/// exactly 0), and InvalidParameterError on bad config (iterations == 0,
/// vertex out of range, fewer than 3 vertices).
ChainTrace run_chain(const Graph& g, const ChainConfig& cfg);

/// Betweenness estimate from a chain: the dependency scores of the start state
/// and of each accepted step's new state, summed and normalized by
/// (T+1)(n-1). Always in [0, 1].
double estimate_betweenness(const ChainTrace& trace, const Graph& g);

/// Exact concentration bound via n dependency accumulations (planning and
/// verification only; this costs as much as exact betweenness).
MuBound mu_exact(const Graph& g, Vertex r);

/// mu^2/(2 eps^2) * ln(2/delta), the sample budget before rounding.
double required_samples_bound(double epsilon, double delta, double mu);

/// Smallest integer T >= required_samples_bound(...).
std::uint64_t required_samples(double epsilon, double delta, double mu);

/// Probability bound on missing the estimate by more than epsilon after T
/// iterations: 2 exp{-(T/2)(2 eps/mu - 3/T)^2}, clamped to [0, 1] and equal to
/// 1 whenever 2 eps/mu <= 3/T.
double tail_bound(double epsilon, std::uint64_t iterations, double mu);

}  // namespace bcmc

#endif  // BCMC_SINGLE_CHAIN_HPP
