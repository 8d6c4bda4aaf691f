#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "alphacent/errors.hpp"
#include "alphacent/numeric.hpp"

namespace alphacent {

/// One undirected edge; endpoints are stored with u < v.
struct Edge {
    std::size_t u;
    std::size_t v;
    double weight;
};

/// Adjacency entry: the opposite endpoint, the edge weight, and the index of
/// the edge in the graph's edge list.
struct Neighbor {
    std::size_t node;
    double weight;
    std::size_t edge;
};

/// Simple undirected graph with strictly positive edge weights.
///
/// Node labels are opaque strings; dense indices are assigned in insertion
/// order and all computations work on indices. An absent edge conceptually
/// has weight zero, but zero weights are never stored. Instances are treated
/// as immutable once built, so const references can be shared freely across
/// threads.
class WeightedGraph {
public:
    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::string& label(std::size_t u) const {
        check_node(u);
        return labels_[u];
    }

    std::optional<std::size_t> find_node(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Adds a node with a fresh label; duplicate labels are rejected.
    std::size_t add_node(std::string label) {
        auto [it, inserted] = index_.try_emplace(std::move(label), labels_.size());
        if (!inserted) throw validation_error("duplicate node label: " + it->first);
        labels_.push_back(it->first);
        adjacency_.emplace_back();
        return labels_.size() - 1;
    }

    /// Index of the labelled node, creating it if needed.
    std::size_t ensure_node(std::string_view label) {
        auto it = index_.find(std::string(label));
        if (it != index_.end()) return it->second;
        return add_node(std::string(label));
    }

    void add_edge(std::size_t u, std::size_t v, double weight) {
        check_node(u);
        check_node(v);
        if (u == v)
            throw validation_error("self-loop on node '" + labels_[u] + "'");
        if (!(weight > 0.0) || !std::isfinite(weight))
            throw validation_error("edge weight must be a positive finite real, got " +
                                   number_to_string(weight));
        if (!edge_keys_.insert(edge_key(u, v)).second)
            throw validation_error("duplicate edge {" + labels_[u] + ", " + labels_[v] + "}");
        const std::size_t id = edges_.size();
        edges_.push_back({std::min(u, v), std::max(u, v), weight});
        adjacency_[u].push_back({v, weight, id});
        adjacency_[v].push_back({u, weight, id});
    }

    bool has_edge(std::size_t u, std::size_t v) const {
        check_node(u);
        check_node(v);
        if (u == v) return false;
        return edge_keys_.count(edge_key(u, v)) != 0;
    }

    /// Weight of {u, v}, or 0 when the edge is absent.
    double weight(std::size_t u, std::size_t v) const {
        if (!has_edge(u, v)) return 0.0;
        for (const Neighbor& nb : adjacency_[u])
            if (nb.node == v) return nb.weight;
        return 0.0; // unreachable
    }

    std::span<const Neighbor> neighbors(std::size_t u) const {
        check_node(u);
        return adjacency_[u];
    }

    const std::vector<Edge>& edges() const { return edges_; }

    /// Number of edges incident to u.
    std::size_t degree(std::size_t u) const {
        check_node(u);
        return adjacency_[u].size();
    }

    /// Sum of the weights of the edges incident to u; 0 for isolated nodes.
    double strength(std::size_t u) const {
        check_node(u);
        double total = 0.0;
        for (const Neighbor& nb : adjacency_[u]) total += nb.weight;
        return total;
    }

private:
    static std::uint64_t edge_key(std::size_t u, std::size_t v) {
        const auto a = static_cast<std::uint64_t>(std::min(u, v));
        const auto b = static_cast<std::uint64_t>(std::max(u, v));
        return (a << 32) | b;
    }

    void check_node(std::size_t u) const {
        if (u >= labels_.size())
            throw std::out_of_range("node index " + std::to_string(u) + " out of range (n=" +
                                    std::to_string(labels_.size()) + ")");
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<Edge> edges_;
    std::unordered_set<std::uint64_t> edge_keys_;
};

/// Structural summary used to decide which measures a graph supports.
struct ValidationReport {
    bool is_connected = true;
    std::size_t min_degree = 0;
    double min_weight = 0.0;
    double max_weight = 0.0;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
};

inline bool is_connected(const WeightedGraph& g) {
    const std::size_t n = g.node_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (const Neighbor& nb : g.neighbors(u)) {
            if (!seen[nb.node]) {
                seen[nb.node] = 1;
                ++reached;
                stack.push_back(nb.node);
            }
        }
    }
    return reached == n;
}

inline ValidationReport validate(const WeightedGraph& g) {
    ValidationReport report;
    report.node_count = g.node_count();
    report.edge_count = g.edge_count();
    report.is_connected = is_connected(g);
    if (g.node_count() > 0) {
        report.min_degree = g.degree(0);
        for (std::size_t u = 1; u < g.node_count(); ++u)
            report.min_degree = std::min(report.min_degree, g.degree(u));
    }
    if (!g.edges().empty()) {
        report.min_weight = report.max_weight = g.edges().front().weight;
        for (const Edge& e : g.edges()) {
            report.min_weight = std::min(report.min_weight, e.weight);
            report.max_weight = std::max(report.max_weight, e.weight);
        }
    }
    return report;
}

/// Same topology with every weight replaced by its multiplicative inverse.
/// Used to turn affinity-style weights into distance-style ones.
inline WeightedGraph invert_weights(const WeightedGraph& g) {
    WeightedGraph out;
    for (std::size_t u = 0; u < g.node_count(); ++u) out.add_node(g.label(u));
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, 1.0 / e.weight);
    return out;
}

} // namespace alphacent
