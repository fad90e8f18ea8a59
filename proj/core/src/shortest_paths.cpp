#include "bcmc/shortest_paths.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace bcmc {

namespace {

void bfs_distances(const Graph& g, Vertex s, std::vector<double>& dist) {
    std::vector<Vertex> queue{s};
    dist[s] = 0.0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (const Neighbor& nb : g.neighbors(v)) {
            if (std::isinf(dist[nb.to])) {
                dist[nb.to] = dist[v] + 1.0;
                queue.push_back(nb.to);
            }
        }
    }
}

void dijkstra_distances(const Graph& g, Vertex s, std::vector<double>& dist) {
    using Entry = std::pair<double, Vertex>;  // (tentative distance, vertex)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    dist[s] = 0.0;
    pq.push({0.0, s});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > dist[v]) continue;  // stale entry
        for (const Neighbor& nb : g.neighbors(v)) {
            double cand = d + nb.weight;
            if (cand < dist[nb.to]) {
                dist[nb.to] = cand;
                pq.push({cand, nb.to});
            }
        }
    }
}

}  // namespace

ShortestPathDag shortest_path_dag(const Graph& g, Vertex s) {
    const std::size_t n = g.vertex_count();
    if (s >= n) throw InvalidParameterError("source vertex out of range");

    ShortestPathDag spd;
    spd.source = s;
    spd.dist.assign(n, std::numeric_limits<double>::infinity());
    if (g.weighted()) {
        dijkstra_distances(g, s, spd.dist);
    } else {
        bfs_distances(g, s, spd.dist);
    }

    // Predecessors from one deterministic edge scan against final distances.
    // u precedes v iff the edge is tight; dist[u] < dist[v] keeps the DAG
    // acyclic even when a tiny weight falls inside the tolerance.
    spd.preds.assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
        for (const Neighbor& nb : g.neighbors(v)) {
            if (spd.dist[nb.to] < spd.dist[v] && distance_equal(spd.dist[v], spd.dist[nb.to] + nb.weight)) {
                spd.preds[v].push_back(nb.to);
            }
        }
        std::sort(spd.preds[v].begin(), spd.preds[v].end());
    }

    spd.order.resize(n);
    std::iota(spd.order.begin(), spd.order.end(), 0);
    std::sort(spd.order.begin(), spd.order.end(), [&](Vertex a, Vertex b) {
        if (spd.dist[a] != spd.dist[b]) return spd.dist[a] < spd.dist[b];
        return a < b;
    });

    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    spd.num_paths.assign(n, 0);
    spd.num_paths[s] = 1;
    for (Vertex v : spd.order) {
        if (v == s) continue;
        std::uint64_t total = 0;
        for (Vertex u : spd.preds[v]) {
            if (total > kMax - spd.num_paths[u]) throw SigmaOverflowError();
            total += spd.num_paths[u];
        }
        spd.num_paths[v] = total;
    }
    return spd;
}

}  // namespace bcmc
