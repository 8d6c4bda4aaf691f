#pragma once

#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "alphacent/commands.hpp"
#include "alphacent/csv.hpp"
#include "alphacent/generators.hpp"
#include "alphacent/graph_io.hpp"
#include "alphacent/shortest_paths.hpp"
#include "alphacent/summary.hpp"
#include "alphacent/useful_interval.hpp"

namespace alphacent {

/// A parameter sweep: one model, one swept parameter over a grid, fixed
/// parameters otherwise, a fixed number of replicates per grid value.
/// Parsed from a flat key=value text file ('#' comments):
///
///   experiment=er_mu          identifier copied into every output row
///   model=er_normal           er_normal | wrg | rewire
///   param=mu                  er_normal: mu|sigma|mu_sigma|p|n; wrg: p|n;
///                             rewire: swaps
///   grid=10,20,40,80          swept values
///   replicates=100
///   seed=42                   base seed; replicate streams derive from it
///   n=200 p=0.2 mu=10 sigma=1 fixed model parameters
///   require_connected=false   regenerate disconnected graphs
///   max_retries=100
///   invert=true               inverted weights for closeness distances
///   input=path.tsv            rewire only: the network to randomize
///
/// Sweeping n derives p = ln(n)/sqrt(n), above the connectivity threshold;
/// sweeping mu_sigma scales mu and sigma together, preserving their ratio.
struct SweepSpec {
    std::string experiment = "sweep";
    std::string model;
    std::string param;
    std::vector<double> grid;
    std::size_t replicates = 1;
    std::uint64_t seed = 0;
    std::size_t n = 200;
    double p = 0.2;
    double mu = 10.0;
    double sigma = 1.0;
    bool require_connected = false;
    std::size_t max_retries = 100;
    bool invert = true;
    std::string input;
};

namespace detail {

inline bool parse_bool(const std::string& value, const std::string& key) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw parse_error("sweep spec: key '" + key + "' expects true/false, got '" + value + "'");
}

inline double parse_double(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw parse_error("sweep spec: key '" + key + "' expects a number, got '" + value + "'");
    }
}

inline std::uint64_t parse_u64(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        const unsigned long long parsed = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw parse_error("sweep spec: key '" + key + "' expects a nonnegative integer, got '" +
                          value + "'");
    }
}

} // namespace detail

inline SweepSpec parse_sweep_spec(std::istream& in) {
    SweepSpec spec;
    bool have_model = false, have_param = false, have_grid = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        const auto eq = line.find('=', start);
        if (eq == std::string::npos)
            throw parse_error("sweep spec line " + std::to_string(line_no) +
                              ": expected key=value");
        const std::string key = line.substr(start, eq - start);
        const std::string value = line.substr(eq + 1);
        if (key == "experiment") spec.experiment = value;
        else if (key == "model") { spec.model = value; have_model = true; }
        else if (key == "param") { spec.param = value; have_param = true; }
        else if (key == "grid") {
            std::stringstream items(value);
            std::string item;
            spec.grid.clear();
            while (std::getline(items, item, ','))
                spec.grid.push_back(detail::parse_double(item, key));
            have_grid = !spec.grid.empty();
        }
        else if (key == "replicates") spec.replicates = detail::parse_u64(value, key);
        else if (key == "seed") spec.seed = detail::parse_u64(value, key);
        else if (key == "n") spec.n = detail::parse_u64(value, key);
        else if (key == "p") spec.p = detail::parse_double(value, key);
        else if (key == "mu") spec.mu = detail::parse_double(value, key);
        else if (key == "sigma") spec.sigma = detail::parse_double(value, key);
        else if (key == "require_connected")
            spec.require_connected = detail::parse_bool(value, key);
        else if (key == "max_retries") spec.max_retries = detail::parse_u64(value, key);
        else if (key == "invert") spec.invert = detail::parse_bool(value, key);
        else if (key == "input") spec.input = value;
        else throw parse_error("sweep spec line " + std::to_string(line_no) + ": unknown key '" +
                               key + "'");
    }
    if (!have_model) throw parse_error("sweep spec: missing 'model'");
    if (!have_param) throw parse_error("sweep spec: missing 'param'");
    if (!have_grid) throw parse_error("sweep spec: missing or empty 'grid'");
    if (spec.replicates < 1) throw parse_error("sweep spec: replicates must be at least 1");

    const bool er = spec.model == "er_normal";
    const bool is_wrg = spec.model == "wrg";
    const bool is_rewire = spec.model == "rewire";
    if (!er && !is_wrg && !is_rewire)
        throw parse_error("sweep spec: unknown model '" + spec.model + "'");
    if (er && spec.param != "mu" && spec.param != "sigma" && spec.param != "mu_sigma" &&
        spec.param != "p" && spec.param != "n")
        throw parse_error("sweep spec: er_normal cannot sweep '" + spec.param + "'");
    if (is_wrg && spec.param != "p" && spec.param != "n")
        throw parse_error("sweep spec: wrg cannot sweep '" + spec.param + "'");
    if (is_rewire && spec.param != "swaps")
        throw parse_error("sweep spec: rewire can only sweep 'swaps'");
    if (is_rewire && spec.input.empty())
        throw parse_error("sweep spec: rewire needs 'input'");
    return spec;
}

/// Per-replicate metrics; unset optionals mean the metric could not be
/// computed and the reason is in `error`.
struct ReplicateMetrics {
    std::optional<double> mean_degree;
    std::optional<double> mean_strength;
    std::optional<double> mean_dist;
    std::optional<double> mean_dist_w;
    std::optional<UsefulInterval> u_degree;
    std::optional<UsefulInterval> u_closeness;
    std::string error;
};

namespace detail {

inline void note_error(ReplicateMetrics& metrics, const std::string& what) {
    if (!metrics.error.empty()) metrics.error += "; ";
    metrics.error += what;
}

/// Mean over ordered node pairs (u, v), u != v; infinite when disconnected.
inline double mean_pairwise(const WeightedGraph& g, bool weighted, bool invert_flag) {
    const std::size_t n = g.node_count();
    if (n < 2) return 0.0;
    const WeightedGraph inverted = (weighted && invert_flag) ? invert_weights(g)
                                                             : WeightedGraph{};
    const WeightedGraph& dg = (weighted && invert_flag) ? inverted : g;
    double total = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
        const std::vector<double> dist =
            weighted ? weighted_distances(dg, u, 1.0) : unweighted_distances(dg, u);
        for (double d : dist) total += d;
    }
    return total / (static_cast<double>(n) * static_cast<double>(n - 1));
}

} // namespace detail

inline ReplicateMetrics compute_replicate_metrics(const WeightedGraph& g, bool invert_flag) {
    ReplicateMetrics metrics;
    const std::size_t n = g.node_count();
    metrics.mean_degree = n == 0 ? 0.0 : 2.0 * static_cast<double>(g.edge_count()) /
                                             static_cast<double>(n);
    double strength_total = 0.0;
    for (const Edge& e : g.edges()) strength_total += 2.0 * e.weight;
    metrics.mean_strength = n == 0 ? 0.0 : strength_total / static_cast<double>(n);
    metrics.mean_dist = detail::mean_pairwise(g, false, invert_flag);
    metrics.mean_dist_w = detail::mean_pairwise(g, true, invert_flag);
    try {
        metrics.u_degree = degree_useful_interval(g);
    } catch (const graph_error& e) {
        detail::note_error(metrics, std::string("u_degree: ") + e.what());
    }
    try {
        metrics.u_closeness = closeness_useful_interval(g, invert_flag);
    } catch (const graph_error& e) {
        detail::note_error(metrics, std::string("u_closeness: ") + e.what());
    }
    return metrics;
}

namespace detail {

struct MetricColumns {
    std::vector<double> mean_degree, mean_strength, mean_dist, mean_dist_w;
    std::vector<double> ud_lo, ud_hi, ud_len, uc_lo, uc_hi, uc_len;
};

inline void emit_cell(std::ostream& out, const std::optional<double>& value,
                      std::vector<double>& column) {
    if (value) {
        out << ',' << csv_number(*value);
        column.push_back(*value);
    } else {
        out << ',' << kCsvNA;
    }
}

inline ModelConfig config_for(const SweepSpec& spec, double value) {
    ModelConfig cfg;
    cfg.n = spec.n;
    cfg.p = spec.p;
    cfg.mu = spec.mu;
    cfg.sigma = spec.sigma;
    cfg.require_connected = spec.require_connected;
    cfg.max_retries = spec.max_retries;
    if (spec.param == "mu") cfg.mu = value;
    else if (spec.param == "sigma") cfg.sigma = value;
    else if (spec.param == "p") cfg.p = value;
    else if (spec.param == "mu_sigma") {
        cfg.mu = value;
        cfg.sigma = value * spec.sigma / spec.mu;
    } else if (spec.param == "n") {
        cfg.n = static_cast<std::size_t>(value);
        cfg.p = std::log(static_cast<double>(cfg.n)) / std::sqrt(static_cast<double>(cfg.n));
    }
    return cfg;
}

} // namespace detail

/// Runs the sweep: one record row per (grid value, replicate), canonical
/// order, and one summary row per (grid value, metric) with median/IQR next
/// to mean/std. Replicate failures are recorded, not fatal.
inline void run_sweep(const SweepSpec& spec, std::ostream& records, std::ostream& summary) {
    std::optional<WeightedGraph> base;
    if (spec.model == "rewire") {
        std::ifstream in(spec.input);
        if (!in) throw parse_error("cannot open input '" + spec.input + "'");
        base = load_edge_list(in);
    }

    records << "experiment,param,value,replicate,seed,error,"
               "mean_degree,mean_strength,mean_dist,mean_dist_w,"
               "ud_lo,ud_hi,ud_len,uc_lo,uc_hi,uc_len\n";

    struct ValueSummary {
        double value;
        detail::MetricColumns columns;
    };
    std::vector<ValueSummary> summaries;

    for (std::size_t vi = 0; vi < spec.grid.size(); ++vi) {
        const double value = spec.grid[vi];
        ValueSummary vs{value, {}};
        for (std::size_t rep = 0; rep < spec.replicates; ++rep) {
            const std::uint64_t stream =
                rng::derive_seed(spec.seed, vi * spec.replicates + rep);
            records << csv_field(spec.experiment) << ',' << csv_field(spec.param) << ','
                    << csv_number(value) << ',' << rep << ',' << stream;
            ReplicateMetrics metrics;
            try {
                WeightedGraph g = [&] {
                    if (spec.model == "er_normal") {
                        ModelConfig cfg = detail::config_for(spec, value);
                        cfg.seed = stream;
                        return er_normal(cfg);
                    }
                    if (spec.model == "wrg") {
                        ModelConfig cfg = detail::config_for(spec, value);
                        cfg.seed = stream;
                        return wrg(cfg);
                    }
                    return rewire(*base, static_cast<std::size_t>(value), stream);
                }();
                metrics = compute_replicate_metrics(g, spec.invert);
            } catch (const graph_error& e) {
                metrics = ReplicateMetrics{};
                metrics.error = e.what();
            }
            records << ',' << csv_field(metrics.error);
            detail::emit_cell(records, metrics.mean_degree, vs.columns.mean_degree);
            detail::emit_cell(records, metrics.mean_strength, vs.columns.mean_strength);
            detail::emit_cell(records, metrics.mean_dist, vs.columns.mean_dist);
            detail::emit_cell(records, metrics.mean_dist_w, vs.columns.mean_dist_w);
            const auto& ud = metrics.u_degree;
            detail::emit_cell(records,
                              ud ? std::optional<double>(ud->interval.lo) : std::nullopt,
                              vs.columns.ud_lo);
            detail::emit_cell(records,
                              ud ? std::optional<double>(ud->interval.hi) : std::nullopt,
                              vs.columns.ud_hi);
            detail::emit_cell(
                records, ud ? std::optional<double>(interval_length(ud->interval)) : std::nullopt,
                vs.columns.ud_len);
            const auto& uc = metrics.u_closeness;
            detail::emit_cell(records,
                              uc ? std::optional<double>(uc->interval.lo) : std::nullopt,
                              vs.columns.uc_lo);
            detail::emit_cell(records,
                              uc ? std::optional<double>(uc->interval.hi) : std::nullopt,
                              vs.columns.uc_hi);
            detail::emit_cell(
                records, uc ? std::optional<double>(interval_length(uc->interval)) : std::nullopt,
                vs.columns.uc_len);
            records << '\n';
        }
        summaries.push_back(std::move(vs));
    }

    summary << "experiment,param,value,metric,count,median,iqr,mean,std\n";
    for (const ValueSummary& vs : summaries) {
        const std::pair<const char*, const std::vector<double>*> metrics[] = {
            {"mean_degree", &vs.columns.mean_degree},
            {"mean_strength", &vs.columns.mean_strength},
            {"mean_dist", &vs.columns.mean_dist},
            {"mean_dist_w", &vs.columns.mean_dist_w},
            {"ud_lo", &vs.columns.ud_lo},
            {"ud_hi", &vs.columns.ud_hi},
            {"ud_len", &vs.columns.ud_len},
            {"uc_lo", &vs.columns.uc_lo},
            {"uc_hi", &vs.columns.uc_hi},
            {"uc_len", &vs.columns.uc_len},
        };
        for (const auto& [name, column] : metrics) {
            summary << csv_field(spec.experiment) << ',' << csv_field(spec.param) << ','
                    << csv_number(vs.value) << ',' << name << ',' << column->size();
            if (column->empty()) {
                summary << ',' << kCsvNA << ',' << kCsvNA << ',' << kCsvNA << ',' << kCsvNA
                        << '\n';
                continue;
            }
            const SummaryStat stat = summarize(*column);
            const auto [mean, sd] = mean_std(*column);
            summary << ',' << csv_number(stat.median) << ',' << csv_number(stat.iqr) << ','
                    << csv_number(mean) << ',' << csv_number(sd) << '\n';
        }
    }
}

} // namespace alphacent
