#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "alphacent/centrality.hpp"
#include "alphacent/csv.hpp"
#include "alphacent/graph.hpp"
#include "alphacent/interval.hpp"
#include "alphacent/useful_interval.hpp"

namespace alphacent {

/// Uniform alpha grid with `steps` points including both endpoints.
inline std::vector<double> alpha_grid(double lo, double hi, std::size_t steps) {
    if (steps < 2) throw std::invalid_argument("alpha grid needs at least two steps");
    if (!(lo <= hi)) throw std::invalid_argument("alpha grid bounds out of order");
    std::vector<double> grid;
    grid.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i)
        grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
    return grid;
}

/// Everything the `analyze` subcommand reports for one network.
struct NetworkReport {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    ExtendedInterval s_degree_prod;
    ExtendedInterval s_closeness_prod;
    ExtendedInterval s_degree_sum;
    ExtendedInterval s_closeness_sum;
    UsefulInterval u_degree;
    UsefulInterval u_closeness;
};

/// Safe intervals of all four exponential measures plus both useful
/// intervals. Closeness distances run on inverted weights when
/// invert_weights is set (the default convention).
inline NetworkReport analyze_network(const WeightedGraph& g, bool invert_weights_flag) {
    NetworkReport report;
    report.nodes = g.node_count();
    report.edges = g.edge_count();
    report.s_degree_prod = safe_interval(g, kDegreeProd);
    report.s_degree_sum = safe_interval(g, kDegreeSum);
    report.s_closeness_sum = safe_interval(g, kClosenessSum);
    const WeightedGraph inverted = invert_weights_flag ? invert_weights(g) : WeightedGraph{};
    const WeightedGraph& distance_graph = invert_weights_flag ? inverted : g;
    report.s_closeness_prod = safe_interval(distance_graph, kClosenessProd);
    report.u_degree = degree_useful_interval(g);
    report.u_closeness = closeness_useful_interval(g, invert_weights_flag);
    return report;
}

inline void write_analyze_csv(const NetworkReport& r, std::ostream& out) {
    out << "nodes,edges,"
           "s_degree_prod_lo,s_degree_prod_hi,s_closeness_prod_lo,s_closeness_prod_hi,"
           "s_degree_sum_lo,s_degree_sum_hi,s_closeness_sum_lo,s_closeness_sum_hi,"
           "u_degree_lo,u_degree_hi,u_degree_len,"
           "u_closeness_lo,u_closeness_hi,u_closeness_len\n";
    out << r.nodes << ',' << r.edges << ',' << csv_number(r.s_degree_prod.lo) << ','
        << csv_number(r.s_degree_prod.hi) << ',' << csv_number(r.s_closeness_prod.lo) << ','
        << csv_number(r.s_closeness_prod.hi) << ',' << csv_number(r.s_degree_sum.lo) << ','
        << csv_number(r.s_degree_sum.hi) << ',' << csv_number(r.s_closeness_sum.lo) << ','
        << csv_number(r.s_closeness_sum.hi) << ',' << csv_number(r.u_degree.interval.lo) << ','
        << csv_number(r.u_degree.interval.hi) << ','
        << csv_number(interval_length(r.u_degree.interval)) << ','
        << csv_number(r.u_closeness.interval.lo) << ',' << csv_number(r.u_closeness.interval.hi)
        << ',' << csv_number(interval_length(r.u_closeness.interval)) << '\n';
}

namespace detail {

/// Exponential measures refuse grids leaving the safe interval unless
/// forced; log measures are unrestricted.
inline void gate_alpha_grid(const WeightedGraph& g, MeasureKind kind, double lo, double hi,
                            bool force) {
    if (kind.summarization == Summarization::log || force) return;
    const ExtendedInterval safe = safe_interval(g, kind);
    if (lo < safe.lo || hi > safe.hi)
        throw computability_error("alpha grid [" + number_to_string(lo) + ", " +
                                  number_to_string(hi) + "] leaves the safe interval [" +
                                  number_to_string(safe.lo) + ", " + number_to_string(safe.hi) +
                                  "] of " + measure_name(kind) + " (use --force to override)");
}

/// The graph the measure's distances run on: closeness measures use the
/// inverted-weight graph when the convention is enabled; degree measures
/// always use the original.
inline const WeightedGraph& measure_graph(const WeightedGraph& original,
                                          const WeightedGraph& inverted, bool invert_flag,
                                          MeasureKind kind) {
    return (kind.reach == Reach::closeness && invert_flag) ? inverted : original;
}

inline double population_variance(std::span<const double> values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) {
        const double d = v - mean;
        var += d * d;
    }
    return var / static_cast<double>(values.size());
}

} // namespace detail

struct RankTraceOptions {
    MeasureKind kind = kDegreeLog;
    double alpha_min = -1.0;
    double alpha_max = 1.0;
    std::size_t steps = 2;
    bool invert_weights = true;
    bool force = false;
};

/// CSV rows (alpha, node, value, rank, error) for the chosen measure over a
/// uniform alpha grid. With --force, an alpha whose evaluation leaves the
/// representable range yields NA rows instead of aborting.
inline void write_rank_trace_csv(const WeightedGraph& g, const RankTraceOptions& opt,
                                 std::ostream& out) {
    const WeightedGraph inverted = opt.invert_weights ? invert_weights(g) : WeightedGraph{};
    const WeightedGraph& mg =
        detail::measure_graph(g, inverted, opt.invert_weights, opt.kind);
    detail::gate_alpha_grid(mg, opt.kind, opt.alpha_min, opt.alpha_max, opt.force);
    out << "alpha,node,value,rank,error\n";
    for (double alpha : alpha_grid(opt.alpha_min, opt.alpha_max, opt.steps)) {
        try {
            const CentralityProfile profile = evaluate(mg, opt.kind, alpha);
            const std::vector<std::size_t> ranks = rank_nodes(profile);
            for (std::size_t u = 0; u < g.node_count(); ++u)
                out << csv_number(alpha) << ',' << csv_field(g.label(u)) << ','
                    << csv_number(profile.values[u]) << ',' << ranks[u] << ",\n";
        } catch (const computability_error& e) {
            for (std::size_t u = 0; u < g.node_count(); ++u)
                out << csv_number(alpha) << ',' << csv_field(g.label(u)) << ',' << kCsvNA << ','
                    << kCsvNA << ',' << csv_field(e.what()) << '\n';
        }
    }
}

struct VarianceTraceOptions {
    double alpha_min = -1.0;
    double alpha_max = 1.0;
    std::size_t steps = 2;
    bool invert_weights = true;
    bool force = false;
};

/// CSV of the across-node variance of all six measures per alpha. The
/// exponential measures report log2 of the raw variance (so the two scales
/// are comparable); the log measures report the variance itself, which is
/// exactly quadratic in alpha.
inline void write_variance_trace_csv(const WeightedGraph& g, const VarianceTraceOptions& opt,
                                     std::ostream& out) {
    const WeightedGraph inverted = opt.invert_weights ? invert_weights(g) : WeightedGraph{};
    for (MeasureKind kind : kAllMeasures)
        detail::gate_alpha_grid(
            detail::measure_graph(g, inverted, opt.invert_weights, kind), kind, opt.alpha_min,
            opt.alpha_max, opt.force);
    out << "alpha,degree_log_var,closeness_log_var,degree_prod_log2var,degree_sum_log2var,"
           "closeness_prod_log2var,closeness_sum_log2var,error\n";
    const MeasureKind column_order[] = {kDegreeLog,  kClosenessLog,  kDegreeProd,
                                        kDegreeSum,  kClosenessProd, kClosenessSum};
    for (double alpha : alpha_grid(opt.alpha_min, opt.alpha_max, opt.steps)) {
        out << csv_number(alpha);
        std::string errors;
        for (MeasureKind kind : column_order) {
            const WeightedGraph& mg =
                detail::measure_graph(g, inverted, opt.invert_weights, kind);
            try {
                const CentralityProfile profile = evaluate(mg, kind, alpha);
                double var = detail::population_variance(profile.values);
                if (kind.summarization != Summarization::log) var = std::log2(var);
                out << ',' << csv_number(var);
            } catch (const computability_error& e) {
                out << ',' << kCsvNA;
                if (!errors.empty()) errors += "; ";
                errors += measure_name(kind) + ": " + e.what();
            }
        }
        out << ',' << csv_field(errors) << '\n';
    }
}

struct ProfileTraceOptions {
    std::vector<MeasureKind> kinds;
    double alpha_min = 0.0;
    double alpha_max = 1.0;
    std::size_t steps = 2;
    bool invert_weights = true;
    bool force = false;
};

/// Long-format CSV (alpha, measure, node, value, error) of raw per-node
/// values; the optional companion output of `analyze`.
inline void write_profile_csv(const WeightedGraph& g, const ProfileTraceOptions& opt,
                              std::ostream& out) {
    const WeightedGraph inverted = opt.invert_weights ? invert_weights(g) : WeightedGraph{};
    for (MeasureKind kind : opt.kinds)
        detail::gate_alpha_grid(
            detail::measure_graph(g, inverted, opt.invert_weights, kind), kind, opt.alpha_min,
            opt.alpha_max, opt.force);
    out << "alpha,measure,node,value,error\n";
    for (double alpha : alpha_grid(opt.alpha_min, opt.alpha_max, opt.steps)) {
        for (MeasureKind kind : opt.kinds) {
            const WeightedGraph& mg =
                detail::measure_graph(g, inverted, opt.invert_weights, kind);
            try {
                const CentralityProfile profile = evaluate(mg, kind, alpha);
                for (std::size_t u = 0; u < g.node_count(); ++u)
                    out << csv_number(alpha) << ',' << measure_name(kind) << ','
                        << csv_field(g.label(u)) << ',' << csv_number(profile.values[u]) << ",\n";
            } catch (const computability_error& e) {
                for (std::size_t u = 0; u < g.node_count(); ++u)
                    out << csv_number(alpha) << ',' << measure_name(kind) << ','
                        << csv_field(g.label(u)) << ',' << kCsvNA << ',' << csv_field(e.what())
                        << '\n';
            }
        }
    }
}

} // namespace alphacent
