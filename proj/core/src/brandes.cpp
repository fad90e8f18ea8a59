#include "bcmc/brandes.hpp"

namespace bcmc {

namespace {

void accumulate_dependencies(const Graph& g, Vertex s, std::vector<double>& scores) {
    const ShortestPathDag spd = shortest_path_dag(g, s);
    const std::size_t n = g.vertex_count();
    scores.assign(n, 0.0);
    for (auto it = spd.order.rbegin(); it != spd.order.rend(); ++it) {
        const Vertex w = *it;
        const double share = 1.0 + scores[w];
        for (Vertex u : spd.preds[w]) {
            scores[u] += static_cast<double>(spd.num_paths[u]) / static_cast<double>(spd.num_paths[w]) * share;
        }
    }
    // The accumulation leaves total path mass at the source; the source's own
    // dependency is zero by definition.
    scores[s] = 0.0;
}

}  // namespace

DependencyVector dependency_vector(const Graph& g, Vertex s) {
    if (s >= g.vertex_count()) throw InvalidParameterError("source vertex out of range");
    DependencyVector dep{s, {}};
    accumulate_dependencies(g, s, dep.scores);
    return dep;
}

double dependency_on_target(const Graph& g, Vertex s, Vertex r) {
    if (r >= g.vertex_count()) throw InvalidParameterError("target vertex out of range");
    return dependency_vector(g, s).scores[r];
}

const std::vector<double>& DependencyWorkspace::compute(const Graph& g, Vertex s) {
    if (s >= g.vertex_count()) throw InvalidParameterError("source vertex out of range");
    accumulate_dependencies(g, s, scores_);
    return scores_;
}

BetweennessVector exact_betweenness(const Graph& g) {
    const std::size_t n = g.vertex_count();
    BetweennessVector bc;
    bc.values.assign(n, 0.0);
    DependencyWorkspace ws;
    for (Vertex s = 0; s < n; ++s) {
        const std::vector<double>& dep = ws.compute(g, s);
        for (std::size_t v = 0; v < n; ++v) bc.values[v] += dep[v];
    }
    const double norm = static_cast<double>(n) * static_cast<double>(n - 1);
    for (double& x : bc.values) x /= norm;
    return bc;
}

double exact_betweenness_single(const Graph& g, Vertex r) {
    const std::size_t n = g.vertex_count();
    if (r >= n) throw InvalidParameterError("target vertex out of range");
    double total = 0.0;
    DependencyWorkspace ws;
    for (Vertex s = 0; s < n; ++s) {
        total += ws.compute(g, s)[r];
    }
    return total / (static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace bcmc
