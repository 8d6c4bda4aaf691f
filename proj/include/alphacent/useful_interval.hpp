#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "alphacent/centrality.hpp"
#include "alphacent/extrema.hpp"
#include "alphacent/graph.hpp"
#include "alphacent/interval.hpp"

namespace alphacent {

enum class IntervalDegeneracy {
    none,             // two genuine change points (or one attained twice)
    no_change_points, // every ranking-relevant pair is parallel: U is the whole line
    single_point      // all crossings share one abscissa
};

/// The alpha range between the first and last change points of the log
/// measure's node ranking. Nodes whose lines coincide exactly are tied at
/// every alpha; they are collapsed before the extrema query and reported in
/// coincident_groups.
struct UsefulInterval {
    Reach kind = Reach::degree;
    ExtendedInterval interval = ExtendedInterval::whole();
    IntervalDegeneracy degenerate = IntervalDegeneracy::no_change_points;
    std::vector<std::vector<std::size_t>> coincident_groups;
    std::pair<std::size_t, std::size_t> leftmost_pair{0, 0};  // valid unless no_change_points
    std::pair<std::size_t, std::size_t> rightmost_pair{0, 0};
};

/// One line per node: slope log2(s_u/k_u), intercept log2(k_u), tag = node.
inline std::vector<Line> degree_lines(const WeightedGraph& g) {
    std::vector<Line> lines;
    lines.reserve(g.node_count());
    for (std::size_t u = 0; u < g.node_count(); ++u) {
        const auto [slope, intercept] = degree_line_coefficients(g, u);
        lines.push_back({slope, intercept, u});
    }
    return lines;
}

/// One line per node: slope log2(C_C^w/C_C), intercept log2(C_C), tag =
/// node. With invert set (the usual convention for affinity-style weights),
/// the weighted part runs on the inverse weights.
inline std::vector<Line> closeness_lines(const WeightedGraph& g, bool invert) {
    const WeightedGraph inverted = invert ? invert_weights(g) : WeightedGraph{};
    const WeightedGraph& distance_graph = invert ? inverted : g;
    std::vector<Line> lines;
    lines.reserve(g.node_count());
    for (std::size_t u = 0; u < g.node_count(); ++u) {
        const double c0 = closeness(g, u);
        const double c1 = weighted_closeness(distance_graph, u);
        lines.push_back({std::log2(c1 / c0), std::log2(c0), u});
    }
    return lines;
}

/// Deduplicates coincident lines, then takes the extrema of the survivors.
/// Fewer than two survivors, or an all-parallel family, means the ranking
/// never changes and U is the whole line.
inline UsefulInterval useful_interval(std::span<const Line> lines, Reach kind) {
    if (lines.empty()) throw std::invalid_argument("at least one line is required");
    UsefulInterval result;
    result.kind = kind;

    std::vector<std::size_t> order(lines.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (lines[a].slope != lines[b].slope) return lines[a].slope < lines[b].slope;
        if (lines[a].intercept != lines[b].intercept) return lines[a].intercept < lines[b].intercept;
        return lines[a].tag < lines[b].tag;
    });

    std::vector<Line> survivors;
    std::size_t group_start = 0;
    for (std::size_t i = 1; i <= order.size(); ++i) {
        const bool boundary = i == order.size() ||
                              lines[order[i]].slope != lines[order[group_start]].slope ||
                              lines[order[i]].intercept != lines[order[group_start]].intercept;
        if (boundary) {
            survivors.push_back(lines[order[group_start]]);
            if (i - group_start > 1) {
                std::vector<std::size_t> group;
                for (std::size_t j = group_start; j < i; ++j) group.push_back(lines[order[j]].tag);
                result.coincident_groups.push_back(std::move(group));
            }
            group_start = i;
        }
    }

    if (survivors.size() < 2) return result; // all nodes permanently tied
    const ExtremaResult ext = extrema(survivors);
    if (!ext.has_intersection) return result; // all parallel
    result.interval = {ext.leftmost, ext.rightmost};
    result.degenerate = ext.leftmost == ext.rightmost ? IntervalDegeneracy::single_point
                                                      : IntervalDegeneracy::none;
    result.leftmost_pair = ext.leftmost_pair;
    result.rightmost_pair = ext.rightmost_pair;
    return result;
}

inline UsefulInterval degree_useful_interval(const WeightedGraph& g) {
    return useful_interval(degree_lines(g), Reach::degree);
}

inline UsefulInterval closeness_useful_interval(const WeightedGraph& g, bool invert) {
    return useful_interval(closeness_lines(g, invert), Reach::closeness);
}

} // namespace alphacent
