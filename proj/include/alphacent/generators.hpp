#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alphacent/errors.hpp"
#include "alphacent/graph.hpp"
#include "alphacent/rng.hpp"

namespace alphacent {

/// Parameters of the random models. Defaults follow the usual experimental
/// setup: 200 nodes, connection probability 0.2, weights Normal(10, 1).
struct ModelConfig {
    std::size_t n = 200;
    double p = 0.2;
    double mu = 10.0;
    double sigma = 1.0;
    std::uint64_t seed = 0;
    bool require_connected = false;
    std::size_t max_retries = 100;
};

namespace detail {

inline void check_config(const ModelConfig& cfg, bool needs_weights) {
    if (cfg.n < 1) throw validation_error("model needs at least one node");
    if (!(cfg.p > 0.0 && cfg.p < 1.0))
        throw validation_error("connection probability must lie in (0, 1)");
    if (needs_weights) {
        if (!(cfg.mu > 0.0)) throw validation_error("mean weight must be positive");
        if (!(cfg.sigma >= 0.0)) throw validation_error("weight deviation must be nonnegative");
    }
}

inline WeightedGraph indexed_nodes(std::size_t n) {
    WeightedGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_node(std::to_string(i));
    return g;
}

inline WeightedGraph er_normal_once(const ModelConfig& cfg, rng::Engine& engine) {
    WeightedGraph g = indexed_nodes(cfg.n);
    for (std::size_t i = 0; i < cfg.n; ++i)
        for (std::size_t j = i + 1; j < cfg.n; ++j)
            if (engine.bernoulli(cfg.p))
                g.add_edge(i, j, engine.normal_positive(cfg.mu, cfg.sigma));
    return g;
}

inline WeightedGraph wrg_once(std::size_t n, double p, rng::Engine& engine) {
    WeightedGraph g = indexed_nodes(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint64_t w = engine.geometric_successes(p);
            if (w >= 1) g.add_edge(i, j, static_cast<double>(w));
        }
    return g;
}

template <typename Generate>
WeightedGraph with_connectivity_policy(const ModelConfig& cfg, Generate&& generate) {
    rng::Engine engine(cfg.seed);
    const std::size_t attempts = cfg.require_connected ? std::max<std::size_t>(cfg.max_retries, 1)
                                                       : 1;
    for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
        WeightedGraph g = generate(engine);
        if (!cfg.require_connected || is_connected(g)) return g;
    }
    throw generation_error("no connected graph within " + std::to_string(attempts) +
                           " attempts (n=" + std::to_string(cfg.n) +
                           ", p=" + number_to_string(cfg.p) + ")");
}

} // namespace detail

/// Erdos-Renyi topology with Normal(mu, sigma) weights, nonpositive draws
/// resampled. With require_connected set, whole graphs are regenerated from
/// the same stream until one is connected, up to max_retries attempts.
inline WeightedGraph er_normal(const ModelConfig& cfg) {
    detail::check_config(cfg, true);
    return detail::with_connectivity_policy(
        cfg, [&](rng::Engine& engine) { return detail::er_normal_once(cfg, engine); });
}

/// Weighted random graph: every pair draws a geometric integer weight with
/// success probability p, and is an edge exactly when the weight is at
/// least 1. Edge probability is therefore p itself.
inline WeightedGraph wrg(const ModelConfig& cfg) {
    detail::check_config(cfg, false);
    return detail::with_connectivity_policy(
        cfg, [&](rng::Engine& engine) { return detail::wrg_once(cfg.n, cfg.p, engine); });
}

inline WeightedGraph wrg(std::size_t n, double p, std::uint64_t seed) {
    ModelConfig cfg;
    cfg.n = n;
    cfg.p = p;
    cfg.seed = seed;
    return wrg(cfg);
}

/// Degree-preserving randomization by pairwise edge switching: edges {a,b}
/// and {c,d} become {a,d} and {b,c}, each keeping its weight. An attempt is
/// rejected and redrawn when it would create a self-loop or a duplicate
/// edge, or when it would change nothing (same edges, same weights) — a
/// no-op would consume the swap count without randomizing anything. Exactly
/// `swaps` applied swaps are performed; the attempt budget is 100 * |E| per
/// swap. Node degrees and the weight multiset are preserved; strengths in
/// general are not.
inline WeightedGraph rewire(const WeightedGraph& g, std::size_t swaps, std::uint64_t seed) {
    if (g.edge_count() < 2) throw validation_error("rewiring needs at least two edges");
    rng::Engine engine(seed);

    std::vector<Edge> edges = g.edges();
    auto key = [](std::size_t u, std::size_t v) {
        return (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    };
    std::unordered_set<std::uint64_t> present;
    present.reserve(edges.size() * 2);
    for (const Edge& e : edges) present.insert(key(e.u, e.v));

    const std::size_t m = edges.size();
    const std::size_t budget = 100 * m;
    for (std::size_t done = 0; done < swaps; ++done) {
        bool applied = false;
        for (std::size_t attempt = 0; attempt < budget && !applied; ++attempt) {
            const std::size_t i = engine.below(m);
            const std::size_t j = engine.below(m);
            if (i == j) continue;
            Edge& e1 = edges[i];
            Edge& e2 = edges[j];
            // Random orientation of each edge decides which ends swap.
            const bool flip1 = engine.below(2) == 1;
            const bool flip2 = engine.below(2) == 1;
            const std::size_t a = flip1 ? e1.v : e1.u;
            const std::size_t b = flip1 ? e1.u : e1.v;
            const std::size_t c = flip2 ? e2.v : e2.u;
            const std::size_t d = flip2 ? e2.u : e2.v;
            if (a == d || b == c) continue; // self-loop
            const std::uint64_t old1 = key(e1.u, e1.v);
            const std::uint64_t old2 = key(e2.u, e2.v);
            const std::uint64_t new1 = key(a, d);
            const std::uint64_t new2 = key(b, c);
            const bool identity = new1 == old1 && new2 == old2;
            const bool weight_swap_noop = new1 == old2 && new2 == old1 && e1.weight == e2.weight;
            if (identity || weight_swap_noop) continue;
            present.erase(old1);
            present.erase(old2);
            if (present.count(new1) || present.count(new2)) {
                present.insert(old1);
                present.insert(old2);
                continue; // duplicate edge
            }
            present.insert(new1);
            present.insert(new2);
            e1 = {std::min(a, d), std::max(a, d), e1.weight};
            e2 = {std::min(b, c), std::max(b, c), e2.weight};
            applied = true;
        }
        if (!applied)
            throw generation_error("no valid edge swap within " + std::to_string(budget) +
                                   " attempts");
    }

    WeightedGraph out;
    for (std::size_t u = 0; u < g.node_count(); ++u) out.add_node(g.label(u));
    for (const Edge& e : edges) out.add_edge(e.u, e.v, e.weight);
    return out;
}

} // namespace alphacent
