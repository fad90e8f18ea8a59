#include "bcmc/joint_chain.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "bcmc/rng.hpp"
#include "bcmc/single_chain.hpp"

namespace bcmc {

namespace {

void validate_targets(const Graph& g, std::span<const Vertex> targets) {
    if (targets.size() < 2) throw InvalidParameterError("target set must have at least 2 vertices");
    std::set<Vertex> distinct;
    for (Vertex r : targets) {
        if (r >= g.vertex_count()) throw InvalidParameterError("target vertex out of range");
        if (!distinct.insert(r).second) {
            throw InvalidParameterError("duplicate target '" + g.label(r) + "'");
        }
    }
}

}  // namespace

double JointChainTrace::dependency_at(Vertex target, Vertex source) const {
    auto it = dependency.find(key(target, source));
    if (it == dependency.end()) throw InvalidParameterError("trace is missing a dependency score");
    return it->second;
}

std::size_t JointChainTrace::stratum_index(Vertex target) const {
    for (std::size_t i = 0; i < target_set.size(); ++i) {
        if (target_set[i] == target) return i;
    }
    throw InvalidParameterError("vertex is not in the chain's target set");
}

JointChainTrace run_joint_chain(const Graph& g, std::span<const Vertex> targets,
                                std::uint64_t iterations, std::uint64_t seed) {
    validate_targets(g, targets);
    if (iterations == 0) throw InvalidParameterError("iterations must be >= 1");
    const std::size_t n = g.vertex_count();
    const std::size_t k = targets.size();

    JointChainTrace trace;
    trace.target_set.assign(targets.begin(), targets.end());
    trace.vertex_count = n;
    trace.states.reserve(iterations + 1);
    trace.step_accepted.assign(iterations, false);
    trace.strata.assign(k, {});

    auto score_of = [&](Vertex r, Vertex v) -> double {
        auto [it, inserted] = trace.dependency.try_emplace(JointChainTrace::key(r, v), 0.0);
        if (inserted) it->second = dependency_on_target(g, v, r);
        return it->second;
    };

    // Every target traffic-free means the stationary law is undefined. The
    // neighbor scan decides each target exactly (see run_chain).
    bool any_traffic = false;
    for (Vertex r : targets) {
        for (const Neighbor& nb : g.neighbors(r)) {
            if (score_of(r, nb.to) > 0.0) {
                any_traffic = true;
                break;
            }
        }
    }
    if (!any_traffic) {
        throw AllZeroDependencyError("no vertex in the target set lies on a shortest path");
    }

    SplitMix64 proposals = SplitMix64::derive(seed, 0);
    SplitMix64 coins = SplitMix64::derive(seed, 1);

    std::size_t current_idx = proposals.uniform_index(k);
    Vertex current_source = static_cast<Vertex>(proposals.uniform_index(n));
    double current_score = score_of(trace.target_set[current_idx], current_source);
    trace.states.push_back({trace.target_set[current_idx], current_source});
    trace.strata[current_idx].push_back(current_source);

    for (std::uint64_t t = 0; t < iterations; ++t) {
        const std::size_t cand_idx = proposals.uniform_index(k);
        const Vertex cand_source = static_cast<Vertex>(proposals.uniform_index(n));
        const double cand_score = score_of(trace.target_set[cand_idx], cand_source);
        const double accept = capped_ratio(cand_score, current_score);
        if (coins.uniform01() < accept) {
            current_idx = cand_idx;
            current_source = cand_source;
            current_score = cand_score;
            trace.step_accepted[t] = true;
            ++trace.accepted;
        }
        trace.states.push_back({trace.target_set[current_idx], current_source});
        trace.strata[current_idx].push_back(current_source);
    }

    // Estimators compare every sampled source against every target, so fill
    // the cross-target scores now while the graph is at hand.
    std::set<Vertex> sources;
    for (const JointState& s : trace.states) sources.insert(s.source);
    for (Vertex r : trace.target_set) {
        for (Vertex v : sources) score_of(r, v);
    }
    return trace;
}

double estimate_relative_betweenness(const JointChainTrace& trace, Vertex r_i, Vertex r_j) {
    trace.stratum_index(r_i);  // membership check
    const std::vector<Vertex>& stratum = trace.strata[trace.stratum_index(r_j)];
    if (stratum.empty()) {
        throw EmptyStratumError("no samples in the stratum of the conditioning vertex");
    }
    double total = 0.0;
    for (Vertex v : stratum) {
        total += capped_ratio(trace.dependency_at(r_i, v), trace.dependency_at(r_j, v));
    }
    return total / static_cast<double>(stratum.size());
}

double estimate_betweenness_ratio(const JointChainTrace& trace, Vertex r_i, Vertex r_j) {
    const double numerator = estimate_relative_betweenness(trace, r_i, r_j);
    const double denominator = estimate_relative_betweenness(trace, r_j, r_i);
    if (denominator == 0.0) {
        throw ZeroDenominatorError("relative score of the denominator vertex is zero");
    }
    return numerator / denominator;
}

double relative_betweenness(const Graph& g, Vertex r_i, Vertex r_j) {
    const std::size_t n = g.vertex_count();
    if (r_i >= n || r_j >= n) throw InvalidParameterError("vertex out of range");
    DependencyWorkspace ws;
    double total = 0.0;
    for (Vertex v = 0; v < n; ++v) {
        const std::vector<double>& dep = ws.compute(g, v);
        total += capped_ratio(dep[r_i], dep[r_j]);
    }
    return total / static_cast<double>(n);
}

double stationary_relative_mean(const Graph& g, Vertex r_i, Vertex r_j) {
    const std::size_t n = g.vertex_count();
    if (r_i >= n || r_j >= n) throw InvalidParameterError("vertex out of range");
    DependencyWorkspace ws;
    double overlap = 0.0;
    double mass_j = 0.0;
    for (Vertex v = 0; v < n; ++v) {
        const std::vector<double>& dep = ws.compute(g, v);
        overlap += std::min(dep[r_i], dep[r_j]);
        mass_j += dep[r_j];
    }
    if (mass_j == 0.0) {
        throw AllZeroDependencyError("vertex '" + g.label(r_j) + "' lies on no shortest path");
    }
    return overlap / mass_j;
}

std::pair<double, double> betweenness_ratio_identity(const Graph& g, Vertex r_i, Vertex r_j) {
    const double bc_i = exact_betweenness_single(g, r_i);
    const double bc_j = exact_betweenness_single(g, r_j);
    if (bc_i == 0.0 || bc_j == 0.0) {
        throw InvalidParameterError("betweenness ratio undefined: a vertex has zero betweenness");
    }
    const double forward = stationary_relative_mean(g, r_i, r_j);
    const double backward = stationary_relative_mean(g, r_j, r_i);
    if (forward == 0.0 && backward == 0.0) {
        throw InvalidParameterError("dependency supports are disjoint; the ratio degenerates to 0/0");
    }
    return {bc_i / bc_j, forward / backward};
}

std::uint64_t required_samples_joint(double epsilon, double delta, double mu_j) {
    return required_samples(epsilon, delta, mu_j);
}

std::uint64_t planned_total_iterations(const Graph& g, std::span<const Vertex> targets,
                                       Vertex r_j, std::uint64_t stratum_size) {
    validate_targets(g, targets);
    if (stratum_size == 0) throw InvalidParameterError("stratum size must be >= 1");
    const std::size_t n = g.vertex_count();
    DependencyWorkspace ws;
    double total_mass = 0.0;
    double mass_j = 0.0;
    bool found = false;
    for (Vertex r : targets) found = found || (r == r_j);
    if (r_j >= n || !found) throw InvalidParameterError("conditioning vertex is not in the target set");
    for (Vertex v = 0; v < n; ++v) {
        const std::vector<double>& dep = ws.compute(g, v);
        for (Vertex r : targets) total_mass += dep[r];
        mass_j += dep[r_j];
    }
    if (mass_j == 0.0) {
        throw AllZeroDependencyError("vertex '" + g.label(r_j) + "' lies on no shortest path");
    }
    const double planned = std::ceil(static_cast<double>(stratum_size) * total_mass / mass_j);
    if (!(planned < 9e18)) throw InvalidParameterError("iteration budget overflows 64 bits");
    return planned < 1.0 ? 1 : static_cast<std::uint64_t>(planned);
}

RelativeScoreReport relative_report(const JointChainTrace& trace, Vertex r_i, Vertex r_j) {
    RelativeScoreReport report;
    report.r_i = r_i;
    report.r_j = r_j;
    report.samples_i = trace.strata[trace.stratum_index(r_i)].size();
    report.samples_j = trace.strata[trace.stratum_index(r_j)].size();
    try {
        report.rel_ij = estimate_relative_betweenness(trace, r_i, r_j);
    } catch (const EmptyStratumError&) {
    }
    try {
        report.rel_ji = estimate_relative_betweenness(trace, r_j, r_i);
    } catch (const EmptyStratumError&) {
    }
    if (report.rel_ij && report.rel_ji && *report.rel_ji != 0.0) {
        report.ratio = *report.rel_ij / *report.rel_ji;
    }
    return report;
}

}  // namespace bcmc
