#include "bcmc/testkit/brute_force.hpp"

#include <limits>
#include <vector>

#include "bcmc/shortest_paths.hpp"

namespace bcmc::testkit {

namespace {

std::vector<std::vector<double>> all_pairs_distances(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector dist(n, std::vector<double>(n, std::numeric_limits<double>::infinity()));
    for (std::size_t v = 0; v < n; ++v) dist[v][v] = 0.0;
    for (Vertex v = 0; v < n; ++v) {
        for (const Neighbor& nb : g.neighbors(v)) dist[v][nb.to] = nb.weight;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
            }
        }
    }
    return dist;
}

// Walks every shortest s->t path: from u, an edge (u, w) continues a shortest
// path iff dist(s,u) + w(u,w) + dist(w,t) = dist(s,t). Remaining distance
// strictly decreases, so the walk terminates without a visited set.
struct PathEnumerator {
    const Graph& g;
    const std::vector<std::vector<double>>& dist;
    Vertex s, t;
    std::uint64_t paths = 0;
    std::vector<std::uint64_t> interior_visits;  // per vertex, over all shortest paths
    std::vector<Vertex> stack;

    PathEnumerator(const Graph& graph, const std::vector<std::vector<double>>& d, Vertex from, Vertex to)
        : g(graph), dist(d), s(from), t(to), interior_visits(graph.vertex_count(), 0) {}

    void walk(Vertex u, double travelled) {
        if (u == t) {
            ++paths;
            for (Vertex v : stack) ++interior_visits[v];
            return;
        }
        for (const Neighbor& nb : g.neighbors(u)) {
            if (distance_equal(travelled + nb.weight + dist[nb.to][t], dist[s][t])) {
                if (nb.to != t) stack.push_back(nb.to);
                walk(nb.to, travelled + nb.weight);
                if (nb.to != t) stack.pop_back();
            }
        }
    }

    void run() { walk(s, 0.0); }
};

void check_size(const Graph& g) {
    if (g.vertex_count() > kBruteForceLimit) {
        throw TooLargeError("brute-force oracle is limited to " + std::to_string(kBruteForceLimit) +
                            " vertices");
    }
}

}  // namespace

BetweennessVector brute_force_betweenness(const Graph& g) {
    check_size(g);
    const std::size_t n = g.vertex_count();
    const auto dist = all_pairs_distances(g);
    BetweennessVector bc;
    bc.values.assign(n, 0.0);
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = 0; t < n; ++t) {
            if (s == t) continue;
            PathEnumerator paths(g, dist, s, t);
            paths.run();
            for (std::size_t v = 0; v < n; ++v) {
                if (paths.interior_visits[v] > 0) {
                    bc.values[v] += static_cast<double>(paths.interior_visits[v]) /
                                    static_cast<double>(paths.paths);
                }
            }
        }
    }
    const double norm = static_cast<double>(n) * static_cast<double>(n - 1);
    for (double& x : bc.values) x /= norm;
    return bc;
}

std::uint64_t brute_force_path_count(const Graph& g, Vertex s, Vertex t) {
    check_size(g);
    if (s >= g.vertex_count() || t >= g.vertex_count()) {
        throw InvalidParameterError("vertex out of range");
    }
    if (s == t) return 1;
    const auto dist = all_pairs_distances(g);
    PathEnumerator paths(g, dist, s, t);
    paths.run();
    return paths.paths;
}

}  // namespace bcmc::testkit
