#ifndef BCMC_SHORTEST_PATHS_HPP
#define BCMC_SHORTEST_PATHS_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "bcmc/graph.hpp"

namespace bcmc {

/// Relative tolerance used when weighted distances are compared for equality
/// (predecessor membership). Unweighted hop counts compare exactly.
inline constexpr double kDistanceTolerance = 1e-9;

inline bool distance_equal(double a, double b) {
    return std::abs(a - b) <= kDistanceTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

/// All shortest paths out of one source, as a DAG. Unique per (graph, source)
/// and rebuilt bit-identically: BFS for unweighted graphs, Dijkstra for
/// positive weights, predecessors from a deterministic edge scan.
struct ShortestPathDag {
    Vertex source;
    std::vector<double> dist;                 // hop count or weighted length
    std::vector<std::uint64_t> num_paths;     // shortest-path counts; overflow throws
    std::vector<std::vector<Vertex>> preds;   // predecessors on shortest paths
    std::vector<Vertex> order;                // nondecreasing dist, ties by index

    bool operator==(const ShortestPathDag&) const = default;
};

/// Throws InvalidParameterError if s is out of range and SigmaOverflowError
/// if a path count exceeds 64 bits. Assumes a connected graph.
ShortestPathDag shortest_path_dag(const Graph& g, Vertex s);

}  // namespace bcmc

#endif  // BCMC_SHORTEST_PATHS_HPP
