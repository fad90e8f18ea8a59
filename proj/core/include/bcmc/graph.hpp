#ifndef BCMC_GRAPH_HPP
#define BCMC_GRAPH_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bcmc/errors.hpp"

namespace bcmc {

/// Dense vertex index, 0..n-1. External string labels live only at the I/O
/// boundary; everything past parsing works on indices.
using Vertex = std::uint32_t;

struct Neighbor {
    Vertex to;
    double weight;  // 1.0 on unweighted graphs
};

struct EdgeSpec {
    Vertex u;
    Vertex v;
    double weight = 1.0;
};

/// Undirected graph, immutable after construction: no self-loops, no
/// multi-edges, strictly positive weights. Connectivity is a separate check
/// (assert_connected) so parse errors and structure errors stay distinct.
class Graph {
public:
    /// Builds a graph over labels[0..n-1] with the given edges. Throws
    /// InvalidParameterError on self-loops, duplicate edges, bad indices,
    /// non-positive weights, duplicate labels, or an empty edge/vertex set.
    Graph(std::vector<std::string> labels, const std::vector<EdgeSpec>& edges, bool weighted);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool weighted() const { return weighted_; }

    std::span<const Neighbor> neighbors(Vertex v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    const std::string& label(Vertex v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<Vertex> find(std::string_view label) const;
    /// find() or UnknownVertexError.
    Vertex require(std::string_view label) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<std::uint32_t> offsets_;  // CSR: neighbors of v are [offsets_[v], offsets_[v+1])
    std::vector<Neighbor> neighbors_;
    std::size_t edge_count_ = 0;
    bool weighted_ = false;
};

/// Parses whitespace-separated edge lines "u v" (or "u v w" when weighted is
/// set; w > 0). '#' starts a comment, blank lines are skipped, labels are
/// UTF-8 and indexed in first-appearance order. Throws ParseError naming the
/// offending line for malformed lines, non-positive weights, self-loops,
/// duplicate edges, and empty input.
Graph parse_edge_list(std::istream& in, bool weighted);

/// Connected-component sizes, largest first.
std::vector<std::size_t> component_sizes(const Graph& g);

/// Throws DisconnectedGraphError (carrying component sizes) unless g has a
/// single connected component.
void assert_connected(const Graph& g);

}  // namespace bcmc

#endif  // BCMC_GRAPH_HPP
