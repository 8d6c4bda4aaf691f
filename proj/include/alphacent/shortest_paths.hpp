#pragma once

#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "alphacent/graph.hpp"
#include "alphacent/interval.hpp"
#include "alphacent/numeric.hpp"

namespace alphacent {

/// Breadth-first hop counts from src to every node; unreachable nodes get
/// +inf.
inline std::vector<double> unweighted_distances(const WeightedGraph& g, std::size_t src) {
    g.label(src); // bounds check
    std::vector<double> dist(g.node_count(), kInf);
    dist[src] = 0.0;
    std::queue<std::size_t> frontier;
    frontier.push(src);
    while (!frontier.empty()) {
        const std::size_t u = frontier.front();
        frontier.pop();
        for (const Neighbor& nb : g.neighbors(u)) {
            if (dist[nb.node] == kInf) {
                dist[nb.node] = dist[u] + 1.0;
                frontier.push(nb.node);
            }
        }
    }
    return dist;
}

/// Dijkstra distances from src where each edge contributes weight^alpha.
/// Unreachable nodes get +inf. Edge powers are evaluated per call — alpha
/// changes between calls — and each one is representability-checked, so an
/// alpha outside the measure's safe range surfaces as computability_error.
inline std::vector<double> weighted_distances(const WeightedGraph& g, std::size_t src,
                                              double alpha) {
    g.label(src); // bounds check
    if (!std::isfinite(alpha))
        throw std::invalid_argument("alpha must be finite");
    std::vector<double> cost(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        cost[e] = checked_pow(g.edges()[e].weight, alpha);

    std::vector<double> dist(g.node_count(), kInf);
    dist[src] = 0.0;
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0.0, src);
    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        for (const Neighbor& nb : g.neighbors(u)) {
            const double nd = d + cost[nb.edge];
            if (nd < dist[nb.node]) {
                dist[nb.node] = nd;
                heap.emplace(nd, nb.node);
            }
        }
    }
    return dist;
}

} // namespace alphacent
