#include "bcmc/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <sstream>
#include <utility>

namespace bcmc {

Graph::Graph(std::vector<std::string> labels, const std::vector<EdgeSpec>& edges, bool weighted)
    : labels_(std::move(labels)), weighted_(weighted) {
    if (labels_.empty() || edges.empty()) {
        throw InvalidParameterError("graph must have at least one edge");
    }
    const std::size_t n = labels_.size();
    index_.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
        if (!index_.emplace(labels_[v], v).second) {
            throw InvalidParameterError("duplicate vertex label '" + labels_[v] + "'");
        }
    }

    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<std::uint32_t> deg(n, 0);
    for (const EdgeSpec& e : edges) {
        if (e.u >= n || e.v >= n) throw InvalidParameterError("edge endpoint out of range");
        if (e.u == e.v) throw InvalidParameterError("self-loop at '" + labels_[e.u] + "'");
        if (!(e.weight > 0.0)) throw InvalidParameterError("non-positive edge weight");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) {
            throw InvalidParameterError("duplicate edge '" + labels_[e.u] + " " + labels_[e.v] + "'");
        }
        ++deg[e.u];
        ++deg[e.v];
    }
    edge_count_ = edges.size();

    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    neighbors_.resize(2 * edge_count_);
    std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const EdgeSpec& e : edges) {
        const double w = weighted_ ? e.weight : 1.0;
        neighbors_[fill[e.u]++] = {e.v, w};
        neighbors_[fill[e.v]++] = {e.u, w};
    }
}

std::optional<Vertex> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vertex Graph::require(std::string_view label) const {
    auto v = find(label);
    if (!v) throw UnknownVertexError(std::string(label));
    return *v;
}

Graph parse_edge_list(std::istream& in, bool weighted) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> index;
    std::vector<EdgeSpec> edges;
    std::set<std::pair<Vertex, Vertex>> seen;

    auto intern = [&](const std::string& label) -> Vertex {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        Vertex v = static_cast<Vertex>(labels.size());
        labels.push_back(label);
        index.emplace(label, v);
        return v;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

        std::istringstream tokens(line);
        std::string u_label, v_label, w_token, extra;
        if (!(tokens >> u_label)) continue;  // blank or comment-only line
        if (!(tokens >> v_label)) throw ParseError(lineno, "expected two vertex labels");
        double weight = 1.0;
        if (weighted) {
            if (!(tokens >> w_token)) throw ParseError(lineno, "expected edge weight");
            std::size_t consumed = 0;
            try {
                weight = std::stod(w_token, &consumed);
            } catch (const std::exception&) {
                throw ParseError(lineno, "malformed weight '" + w_token + "'");
            }
            if (consumed != w_token.size()) {
                throw ParseError(lineno, "malformed weight '" + w_token + "'");
            }
            if (!(weight > 0.0)) throw ParseError(lineno, "non-positive weight");
        }
        if (tokens >> extra) throw ParseError(lineno, "unexpected trailing token '" + extra + "'");

        if (u_label == v_label) throw ParseError(lineno, "self-loop at '" + u_label + "'");
        Vertex u = intern(u_label);
        Vertex v = intern(v_label);
        if (!seen.insert(std::minmax(u, v)).second) {
            throw ParseError(lineno, "duplicate edge '" + u_label + " " + v_label + "'");
        }
        edges.push_back({u, v, weight});
    }

    if (edges.empty()) throw ParseError(0, "empty graph: no edges in input");
    return Graph(std::move(labels), edges, weighted);
}

std::vector<std::size_t> component_sizes(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> visited(n, false);
    std::vector<std::size_t> sizes;
    std::vector<Vertex> stack;
    for (Vertex start = 0; start < n; ++start) {
        if (visited[start]) continue;
        std::size_t size = 0;
        stack.push_back(start);
        visited[start] = true;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++size;
            for (const Neighbor& nb : g.neighbors(v)) {
                if (!visited[nb.to]) {
                    visited[nb.to] = true;
                    stack.push_back(nb.to);
                }
            }
        }
        sizes.push_back(size);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

void assert_connected(const Graph& g) {
    auto sizes = component_sizes(g);
    if (sizes.size() > 1) throw DisconnectedGraphError(std::move(sizes));
}

}  // namespace bcmc
