#include "bcmc/single_chain.hpp"

#include <cmath>

#include "bcmc/rng.hpp"

namespace bcmc {

namespace {

void validate_chain_params(const Graph& g, const ChainConfig& cfg) {
    if (cfg.target >= g.vertex_count()) throw InvalidParameterError("target vertex out of range");
    if (cfg.iterations == 0) throw InvalidParameterError("iterations must be >= 1");
    if (g.vertex_count() < 3) {
        throw InvalidParameterError("graph must have at least 3 vertices to carry traffic");
    }
    if (cfg.epsilon && !(*cfg.epsilon > 0.0)) throw InvalidParameterError("epsilon must be > 0");
    if (cfg.delta && !(*cfg.delta > 0.0 && *cfg.delta < 1.0)) {
        throw InvalidParameterError("delta must be in (0, 1)");
    }
}

// If r lies interior on any shortest path, the predecessor of r on that path
// is a neighbor whose dependency on r is positive. So scanning N(r) decides
// "all dependencies zero" exactly, for weighted and unweighted graphs alike.
bool target_carries_traffic(const Graph& g, Vertex r, std::unordered_map<Vertex, double>& memo) {
    bool any = false;
    for (const Neighbor& nb : g.neighbors(r)) {
        auto [it, inserted] = memo.try_emplace(nb.to, 0.0);
        if (inserted) it->second = dependency_on_target(g, nb.to, r);
        if (it->second > 0.0) any = true;
    }
    return any;
}

}  // namespace

ChainTrace run_chain(const Graph& g, const ChainConfig& cfg) {
    validate_chain_params(g, cfg);
    const std::size_t n = g.vertex_count();
    const std::uint64_t t_max = cfg.iterations;

    ChainTrace trace;
    trace.target = cfg.target;
    trace.vertex_count = n;
    trace.states.reserve(t_max + 1);
    trace.step_accepted.assign(t_max, false);

    if (!target_carries_traffic(g, cfg.target, trace.dependency)) {
        throw AllZeroDependencyError("vertex '" + g.label(cfg.target) +
                                     "' lies on no shortest path; its betweenness is exactly 0");
    }

    auto score_of = [&](Vertex v) -> double {
        auto [it, inserted] = trace.dependency.try_emplace(v, 0.0);
        if (inserted) it->second = dependency_on_target(g, v, cfg.target);
        return it->second;
    };

    SplitMix64 proposals = SplitMix64::derive(cfg.seed, 0);
    SplitMix64 coins = SplitMix64::derive(cfg.seed, 1);

    Vertex current = static_cast<Vertex>(proposals.uniform_index(n));
    double current_score = score_of(current);
    trace.states.push_back(current);

    for (std::uint64_t t = 0; t < t_max; ++t) {
        const Vertex candidate = static_cast<Vertex>(proposals.uniform_index(n));
        const double candidate_score = score_of(candidate);
        const double accept = capped_ratio(candidate_score, current_score);
        if (coins.uniform01() < accept) {
            current = candidate;
            current_score = candidate_score;
            trace.step_accepted[t] = true;
            ++trace.accepted;
        }
        trace.states.push_back(current);
    }
    return trace;
}

double estimate_betweenness(const ChainTrace& trace, const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (trace.vertex_count != n || trace.target >= n) {
        throw InvalidParameterError("trace does not match this graph");
    }
    if (trace.states.size() < 2 || trace.step_accepted.size() + 1 != trace.states.size()) {
        throw InvalidParameterError("malformed chain trace");
    }
    auto score_of = [&](Vertex v) -> double {
        auto it = trace.dependency.find(v);
        if (it == trace.dependency.end()) throw InvalidParameterError("trace is missing a dependency score");
        return it->second;
    };

    // The sampled multiset: the start state plus the new state of every
    // accepted step. Rejected steps contribute nothing, but the normalization
    // stays (T+1)(n-1).
    double total = score_of(trace.states[0]);
    for (std::size_t t = 0; t < trace.step_accepted.size(); ++t) {
        if (trace.step_accepted[t]) total += score_of(trace.states[t + 1]);
    }
    const double slots = static_cast<double>(trace.states.size());
    return total / (slots * static_cast<double>(n - 1));
}

MuBound mu_exact(const Graph& g, Vertex r) {
    const std::size_t n = g.vertex_count();
    if (r >= n) throw InvalidParameterError("target vertex out of range");
    DependencyWorkspace ws;
    double sum = 0.0;
    double max_score = -1.0;
    Vertex argmax = 0;
    for (Vertex v = 0; v < n; ++v) {
        const double score = ws.compute(g, v)[r];
        sum += score;
        if (score > max_score) {
            max_score = score;
            argmax = v;
        }
    }
    if (sum == 0.0) {
        throw AllZeroDependencyError("vertex '" + g.label(r) + "' lies on no shortest path");
    }
    MuBound bound;
    bound.mu = static_cast<double>(n) * max_score / sum;
    bound.argmax_vertex = argmax;
    bound.mean_score = sum / static_cast<double>(n);
    return bound;
}

double required_samples_bound(double epsilon, double delta, double mu) {
    if (!(epsilon > 0.0)) throw InvalidParameterError("epsilon must be > 0");
    if (!(delta > 0.0 && delta < 1.0)) throw InvalidParameterError("delta must be in (0, 1)");
    if (!(mu >= 1.0)) throw InvalidParameterError("mu must be >= 1");
    return mu * mu / (2.0 * epsilon * epsilon) * std::log(2.0 / delta);
}

std::uint64_t required_samples(double epsilon, double delta, double mu) {
    const double bound = required_samples_bound(epsilon, delta, mu);
    if (!(bound < 9e18)) throw InvalidParameterError("sample budget overflows 64 bits");
    const double up = std::ceil(bound);
    return up < 1.0 ? 1 : static_cast<std::uint64_t>(up);
}

double tail_bound(double epsilon, std::uint64_t iterations, double mu) {
    if (!(epsilon > 0.0)) throw InvalidParameterError("epsilon must be > 0");
    if (!(mu >= 1.0)) throw InvalidParameterError("mu must be >= 1");
    if (iterations == 0) throw InvalidParameterError("iterations must be >= 1");
    const double t = static_cast<double>(iterations);
    const double margin = 2.0 * epsilon / mu - 3.0 / t;
    if (margin <= 0.0) return 1.0;
    return std::min(1.0, 2.0 * std::exp(-0.5 * t * margin * margin));
}

}  // namespace bcmc
