#ifndef BCMC_BRANDES_HPP
#define BCMC_BRANDES_HPP

#include <algorithm>
#include <vector>

#include "bcmc/graph.hpp"
#include "bcmc/shortest_paths.hpp"

namespace bcmc {

/// Dependency scores of one source on every vertex: scores[v] is the sum over
/// targets t of the fraction of shortest source-t paths that pass through v.
/// scores[source] == 0 and 0 <= scores[v] <= n-2.
struct DependencyVector {
    Vertex source;
    std::vector<double> scores;
};

/// Betweenness centrality, normalized by 1/(n(n-1)) over ordered pairs, so
/// every value lies in [0, 1].
struct BetweennessVector {
    std::vector<double> values;
};

/// min{1, numerator/denominator} with the zero conventions shared by the
/// samplers and the relative scores: 0/0 -> 1, x/0 -> 1, 0/x -> 0 (x > 0).
/// These are the limit-consistent values and keep zero-mass states transient.
inline double capped_ratio(double numerator, double denominator) {
    if (denominator == 0.0) return 1.0;  // covers 0/0
    if (numerator == 0.0) return 0.0;
    return std::min(1.0, numerator / denominator);
}

/// Backward accumulation over the shortest-path DAG rooted at s, in reverse
/// distance order. One pass costs O(|E|) on unweighted graphs.
DependencyVector dependency_vector(const Graph& g, Vertex s);

/// dependency_vector(g, s).scores[r]; full accumulation plus projection (no
/// asymptotic shortcut exists).
double dependency_on_target(const Graph& g, Vertex s, Vertex r);

/// Reusable scratch space for repeated dependency accumulations. Single-owner;
/// a Graph shared across threads needs one workspace per thread.
class DependencyWorkspace {
public:
    /// Dependency scores of s on all vertices, written into an internal buffer
    /// that stays valid until the next call.
    const std::vector<double>& compute(const Graph& g, Vertex s);

private:
    std::vector<double> scores_;
};

/// Exact betweenness of every vertex: bc[v] = sum_s delta_s(v) / (n(n-1)),
/// sources accumulated in ascending index order for reproducible sums.
BetweennessVector exact_betweenness(const Graph& g);

/// Exact betweenness of one vertex; bit-identical to exact_betweenness(g)
/// at r because the summation order is the same.
double exact_betweenness_single(const Graph& g, Vertex r);

}  // namespace bcmc

#endif  // BCMC_BRANDES_HPP
