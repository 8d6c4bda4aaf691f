#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alphacent/graph.hpp"
#include "alphacent/interval.hpp"
#include "alphacent/numeric.hpp"
#include "alphacent/shortest_paths.hpp"

namespace alphacent {

enum class Reach { degree, closeness };
enum class Summarization { prod, sum, log };

/// One of the six adjustable measures: local (degree) or global (closeness)
/// reach, combined with weights as a product, a power sum, or affinely in
/// log space.
struct MeasureKind {
    Reach reach;
    Summarization summarization;
};

inline bool operator==(MeasureKind a, MeasureKind b) {
    return a.reach == b.reach && a.summarization == b.summarization;
}

inline constexpr MeasureKind kDegreeProd{Reach::degree, Summarization::prod};
inline constexpr MeasureKind kDegreeSum{Reach::degree, Summarization::sum};
inline constexpr MeasureKind kDegreeLog{Reach::degree, Summarization::log};
inline constexpr MeasureKind kClosenessProd{Reach::closeness, Summarization::prod};
inline constexpr MeasureKind kClosenessSum{Reach::closeness, Summarization::sum};
inline constexpr MeasureKind kClosenessLog{Reach::closeness, Summarization::log};

inline constexpr MeasureKind kAllMeasures[] = {kDegreeProd,    kDegreeSum,    kDegreeLog,
                                               kClosenessProd, kClosenessSum, kClosenessLog};

inline std::string measure_name(MeasureKind kind) {
    std::string name = kind.reach == Reach::degree ? "degree-" : "closeness-";
    switch (kind.summarization) {
        case Summarization::prod: return name + "prod";
        case Summarization::sum: return name + "sum";
        case Summarization::log: return name + "log";
    }
    return name;
}

inline MeasureKind parse_measure(std::string_view name) {
    for (MeasureKind kind : kAllMeasures)
        if (measure_name(kind) == name) return kind;
    throw parse_error("unknown measure '" + std::string(name) +
                      "' (expected degree-prod, degree-sum, degree-log, closeness-prod, "
                      "closeness-sum or closeness-log)");
}

/// Per-node values of one measure at one alpha.
struct CentralityProfile {
    MeasureKind kind;
    double alpha;
    std::vector<double> values;
};

namespace detail {

inline double sum_or_reject_disconnected(const std::vector<double>& dist) {
    double total = 0.0;
    for (double d : dist) {
        if (d == kInf) throw validation_error("graph is disconnected");
        total += d;
    }
    return total;
}

inline void require_nontrivial(const WeightedGraph& g) {
    if (g.node_count() < 2)
        throw validation_error("closeness needs at least two nodes");
}

inline std::size_t positive_degree(const WeightedGraph& g, std::size_t u) {
    const std::size_t k = g.degree(u);
    if (k == 0)
        throw validation_error("degree measures are undefined for zero-degree node '" +
                               g.label(u) + "'");
    return k;
}

inline double combine_prod(double benchmark0, double benchmark1, double alpha) {
    const double value = checked_pow(benchmark0, 1.0 - alpha) * checked_pow(benchmark1, alpha);
    if (!std::isfinite(value) || value == 0.0 || std::fpclassify(value) == FP_SUBNORMAL)
        throw computability_error("product not representable in binary64 at alpha=" +
                                  number_to_string(alpha));
    return value;
}

} // namespace detail

/// Inverse of the total hop-count distance to all other nodes.
inline double closeness(const WeightedGraph& g, std::size_t u) {
    detail::require_nontrivial(g);
    return 1.0 / detail::sum_or_reject_disconnected(unweighted_distances(g, u));
}

/// Inverse of the total weighted shortest-path distance, weights as given.
inline double weighted_closeness(const WeightedGraph& g, std::size_t u) {
    detail::require_nontrivial(g);
    return 1.0 / detail::sum_or_reject_disconnected(weighted_distances(g, u, 1.0));
}

/// k_u^(1-alpha) * s_u^alpha.
inline double degree_prod(const WeightedGraph& g, std::size_t u, double alpha) {
    const auto k = static_cast<double>(detail::positive_degree(g, u));
    return detail::combine_prod(k, g.strength(u), alpha);
}

/// Sum over incident edges of weight^alpha.
inline double degree_sum(const WeightedGraph& g, std::size_t u, double alpha) {
    detail::positive_degree(g, u);
    double total = 0.0;
    for (const Neighbor& nb : g.neighbors(u)) total += checked_pow(nb.weight, alpha);
    if (!std::isfinite(total))
        throw computability_error("power sum overflowed at alpha=" + number_to_string(alpha));
    return total;
}

/// Inverse of the total distance where each edge contributes weight^alpha.
inline double closeness_sum(const WeightedGraph& g, std::size_t u, double alpha) {
    detail::require_nontrivial(g);
    return 1.0 / detail::sum_or_reject_disconnected(weighted_distances(g, u, alpha));
}

/// C_C(u)^(1-alpha) * C_C^w(u)^alpha.
inline double closeness_prod(const WeightedGraph& g, std::size_t u, double alpha) {
    return detail::combine_prod(closeness(g, u), weighted_closeness(g, u), alpha);
}

/// Slope/intercept of a node's log2 degree measure as a function of alpha.
inline std::pair<double, double> degree_line_coefficients(const WeightedGraph& g, std::size_t u) {
    const auto k = static_cast<double>(detail::positive_degree(g, u));
    return {std::log2(g.strength(u) / k), std::log2(k)};
}

/// log2(s_u/k_u) * alpha + log2(k_u); affine in alpha by construction.
inline double degree_log(const WeightedGraph& g, std::size_t u, double alpha) {
    const auto [slope, intercept] = degree_line_coefficients(g, u);
    return slope * alpha + intercept;
}

/// Slope/intercept of a node's log2 closeness measure, distances taken on
/// the graph as given.
inline std::pair<double, double> closeness_line_coefficients(const WeightedGraph& g,
                                                             std::size_t u) {
    const double c0 = closeness(g, u);
    const double c1 = weighted_closeness(g, u);
    return {std::log2(c1 / c0), std::log2(c0)};
}

/// log2(C_C^w/C_C) * alpha + log2(C_C).
inline double closeness_log(const WeightedGraph& g, std::size_t u, double alpha) {
    const auto [slope, intercept] = closeness_line_coefficients(g, u);
    return slope * alpha + intercept;
}

/// Evaluates one measure for every node. For closeness measures the caller
/// passes the graph whose weights already follow the desired distance
/// convention (inverted or not).
inline CentralityProfile evaluate(const WeightedGraph& g, MeasureKind kind, double alpha) {
    CentralityProfile profile{kind, alpha, {}};
    profile.values.reserve(g.node_count());
    for (std::size_t u = 0; u < g.node_count(); ++u) {
        double value = 0.0;
        switch (kind.summarization) {
            case Summarization::prod:
                value = kind.reach == Reach::degree ? degree_prod(g, u, alpha)
                                                    : closeness_prod(g, u, alpha);
                break;
            case Summarization::sum:
                value = kind.reach == Reach::degree ? degree_sum(g, u, alpha)
                                                    : closeness_sum(g, u, alpha);
                break;
            case Summarization::log:
                value = kind.reach == Reach::degree ? degree_log(g, u, alpha)
                                                    : closeness_log(g, u, alpha);
                break;
        }
        profile.values.push_back(value);
    }
    return profile;
}

/// Competition ranking, rank 1 = largest value; exact ties share the
/// smallest rank of the tied group ("1, 1, 3").
inline std::vector<std::size_t> rank_nodes(std::span<const double> values) {
    for (double v : values)
        if (!std::isfinite(v))
            throw std::invalid_argument("rank_nodes requires finite values");
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) return values[a] > values[b];
        return a < b;
    });
    std::vector<std::size_t> rank(values.size(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        if (pos > 0 && values[order[pos]] == values[order[pos - 1]])
            rank[order[pos]] = rank[order[pos - 1]];
        else
            rank[order[pos]] = pos + 1;
    }
    return rank;
}

inline std::vector<std::size_t> rank_nodes(const CentralityProfile& profile) {
    return rank_nodes(std::span<const double>(profile.values));
}

/// Alpha range within which every exponentiation of the measure stays inside
/// the representable binary64 magnitude range [2^-1024, 2^1024].
///
/// With B the set of candidate bases and b = max{(min B)^-1, max B}, the
/// interval is [-1024/log2(b), 1024/log2(b)]. Log measures exponentiate
/// nothing, so their range is the whole line; so is the range when every
/// base equals 1. For closeness-sum the bases are the edge weights of the
/// analyzed graph: inverting weights maps B to its reciprocals and leaves b
/// unchanged, so the degree-sum and closeness-sum intervals coincide by
/// construction and the raw weights are used for both.
inline ExtendedInterval safe_interval(const WeightedGraph& g, MeasureKind kind) {
    if (kind.summarization == Summarization::log) return ExtendedInterval::whole();

    std::vector<double> bases;
    if (kind.summarization == Summarization::sum) {
        if (g.edges().empty())
            throw validation_error("safe interval needs at least one edge");
        for (const Edge& e : g.edges()) bases.push_back(e.weight);
    } else if (kind.reach == Reach::degree) {
        if (g.node_count() == 0)
            throw validation_error("safe interval of an empty graph");
        for (std::size_t u = 0; u < g.node_count(); ++u) {
            bases.push_back(static_cast<double>(detail::positive_degree(g, u)));
            bases.push_back(g.strength(u));
        }
    } else {
        detail::require_nontrivial(g);
        for (std::size_t u = 0; u < g.node_count(); ++u) {
            bases.push_back(closeness(g, u));
            bases.push_back(weighted_closeness(g, u));
        }
    }
    const auto [min_it, max_it] = std::minmax_element(bases.begin(), bases.end());
    const double b = std::max(1.0 / *min_it, *max_it);
    if (b == 1.0) return ExtendedInterval::whole();
    const double hi = 1024.0 / std::log2(b);
    return {-hi, hi};
}

} // namespace alphacent
