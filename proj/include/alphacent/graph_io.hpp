#pragma once

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "alphacent/graph.hpp"

namespace alphacent {

namespace detail {

inline bool is_blank(std::string_view s) {
    return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

inline bool is_comment(std::string_view s) {
    const auto pos = s.find_first_not_of(" \t\r");
    return pos != std::string_view::npos && s[pos] == '#';
}

inline double parse_weight(std::string_view text, std::size_t line_no) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw parse_error("line " + std::to_string(line_no) + ": cannot parse weight '" +
                          std::string(text) + "'");
    if (!std::isfinite(value) || !(value > 0.0))
        throw validation_error("line " + std::to_string(line_no) +
                               ": weight must be a positive finite real, got '" +
                               std::string(text) + "'");
    return value;
}

/// Splits a tab-separated record into exactly three fields.
inline std::array<std::string_view, 3> split_record(std::string_view line, std::size_t line_no) {
    std::array<std::string_view, 3> fields;
    std::size_t start = 0;
    for (int i = 0; i < 2; ++i) {
        const auto tab = line.find('\t', start);
        if (tab == std::string_view::npos)
            throw parse_error("line " + std::to_string(line_no) +
                              ": expected 'u<TAB>v<TAB>weight'");
        fields[i] = line.substr(start, tab - start);
        start = tab + 1;
    }
    fields[2] = line.substr(start);
    if (fields[2].find('\t') != std::string_view::npos)
        throw parse_error("line " + std::to_string(line_no) + ": too many fields");
    if (fields[0].empty() || fields[1].empty() || fields[2].empty())
        throw parse_error("line " + std::to_string(line_no) + ": empty field");
    return fields;
}

} // namespace detail

/// Reads the tab-separated edge-list format: one `u<TAB>v<TAB>weight` record
/// per line, `#` starting a comment line, UTF-8 labels, nodes numbered in
/// first-appearance order. Duplicate edges (in either orientation) and
/// self-loops are rejected.
inline WeightedGraph load_edge_list(std::istream& in) {
    WeightedGraph g;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
        if (detail::is_blank(view) || detail::is_comment(view)) continue;
        const auto fields = detail::split_record(view, line_no);
        const double w = detail::parse_weight(fields[2], line_no);
        const std::size_t u = g.ensure_node(fields[0]);
        const std::size_t v = g.ensure_node(fields[1]);
        try {
            g.add_edge(u, v, w);
        } catch (const validation_error& e) {
            throw validation_error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return g;
}

/// Writes the edge-list format; together with shortest round-trip weight
/// formatting this makes load(emit(g)) reproduce g exactly.
inline void emit_edge_list(const WeightedGraph& g, std::ostream& out) {
    for (const Edge& e : g.edges())
        out << g.label(e.u) << '\t' << g.label(e.v) << '\t' << number_to_string(e.weight)
            << '\n';
}

/// One directed arc of a directed input file.
struct DirectedArc {
    std::string from;
    std::string to;
    double weight;
};

/// Reads the directed variant of the edge-list format. Self-arcs are kept
/// here and dropped by symmetrize_directed; exact duplicate arcs are errors.
inline std::vector<DirectedArc> load_directed_arcs(std::istream& in) {
    std::vector<DirectedArc> arcs;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
        if (detail::is_blank(view) || detail::is_comment(view)) continue;
        const auto fields = detail::split_record(view, line_no);
        const double w = detail::parse_weight(fields[2], line_no);
        std::string key = std::string(fields[0]) + '\t' + std::string(fields[1]);
        if (!seen.insert(key).second)
            throw validation_error("line " + std::to_string(line_no) + ": duplicate arc (" +
                                   std::string(fields[0]) + ", " + std::string(fields[1]) + ")");
        arcs.push_back({std::string(fields[0]), std::string(fields[1]), w});
    }
    return arcs;
}

/// Collapses directed arcs into an undirected graph: each undirected edge
/// carries the sum of the weights of its two directed versions (a missing
/// direction contributes 0). Self-arcs are dropped, their endpoints kept.
inline WeightedGraph symmetrize_directed(std::span<const DirectedArc> arcs) {
    WeightedGraph g;
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::size_t, std::size_t>> order;
    std::unordered_map<std::uint64_t, double> sums;
    for (const DirectedArc& arc : arcs) {
        if (!std::isfinite(arc.weight) || !(arc.weight > 0.0))
            throw validation_error("arc (" + arc.from + ", " + arc.to +
                                   ") weight must be a positive finite real");
        if (!seen.insert(arc.from + '\t' + arc.to).second)
            throw validation_error("duplicate arc (" + arc.from + ", " + arc.to + ")");
        const std::size_t u = g.ensure_node(arc.from);
        const std::size_t v = g.ensure_node(arc.to);
        if (u == v) continue;
        const std::size_t lo = std::min(u, v);
        const std::size_t hi = std::max(u, v);
        const std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;
        auto [it, inserted] = sums.try_emplace(key, 0.0);
        if (inserted) order.emplace_back(lo, hi);
        it->second += arc.weight;
    }
    for (const auto& [lo, hi] : order)
        g.add_edge(lo, hi, sums.at((static_cast<std::uint64_t>(lo) << 32) | hi));
    return g;
}

} // namespace alphacent
