// alphacent — adjustable centrality analytics for weighted graphs.
//
// Subcommands: analyze, rank-trace, generate, rewire, sweep, variance-trace.
// Exit codes: 0 success, 1 usage, 2 data/validation, 3 numeric computability.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "alphacent/commands.hpp"
#include "alphacent/generators.hpp"
#include "alphacent/graph_io.hpp"
#include "alphacent/sweep.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

alphacent::WeightedGraph load_graph(const std::string& path, bool directed) {
    std::ifstream in(path);
    if (!in) throw alphacent::parse_error("cannot open '" + path + "'");
    if (!directed) return alphacent::load_edge_list(in);
    return alphacent::symmetrize_directed(alphacent::load_directed_arcs(in));
}

void write_graph(const alphacent::WeightedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw alphacent::parse_error("cannot open '" + path + "' for writing");
    alphacent::emit_edge_list(g, out);
}

std::ostream& stream_or_stdout(const std::string& path, std::ofstream& file) {
    if (path == "-") return std::cout;
    file.open(path);
    if (!file) throw alphacent::parse_error("cannot open '" + path + "' for writing");
    return file;
}

std::uint64_t effective_seed(const std::optional<std::uint64_t>& given) {
    if (given) return *given;
    std::random_device device;
    return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

struct GridArgs {
    double alpha_min = -1.0;
    double alpha_max = 1.0;
    std::size_t steps = 11;
};

void add_grid_options(CLI::App* cmd, GridArgs& grid) {
    cmd->add_option("--alpha-min", grid.alpha_min, "Lower end of the alpha grid")->required();
    cmd->add_option("--alpha-max", grid.alpha_max, "Upper end of the alpha grid")->required();
    cmd->add_option("--steps", grid.steps, "Grid points including both ends")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))
        ->required();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adjustable centrality, safe/useful alpha intervals, random models and "
                 "rewiring surrogates for weighted graphs"};
    app.require_subcommand(1);

    // analyze
    std::string analyze_path;
    bool analyze_no_invert = false;
    bool analyze_directed = false;
    std::string analyze_values_out;
    std::string analyze_measures;
    GridArgs analyze_grid;
    auto* analyze = app.add_subcommand("analyze",
                                       "Safe and useful alpha intervals of a network (CSV)");
    analyze->add_option("path", analyze_path, "Edge-list file")->required();
    analyze->add_flag("--no-invert-weights", analyze_no_invert,
                      "Use raw weights for closeness distances");
    analyze->add_flag("--directed", analyze_directed,
                      "Read arcs and symmetrize (weights of both directions add up)");
    analyze->add_option("--values-out", analyze_values_out,
                        "Also write per-alpha node values to this file ('-' for stdout)");
    analyze->add_option("--measures", analyze_measures,
                        "Comma-separated measures for --values-out");
    auto* analyze_grid_min =
        analyze->add_option("--alpha-min", analyze_grid.alpha_min, "Grid for --values-out");
    analyze->add_option("--alpha-max", analyze_grid.alpha_max)->needs(analyze_grid_min);
    analyze->add_option("--steps", analyze_grid.steps)
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
    bool analyze_force = false;
    analyze->add_flag("--force", analyze_force, "Evaluate outside the safe interval");

    // rank-trace
    std::string trace_path, trace_measure;
    bool trace_no_invert = false, trace_directed = false, trace_force = false;
    GridArgs trace_grid;
    auto* trace = app.add_subcommand("rank-trace",
                                     "Per-alpha node values and ranks of one measure (CSV)");
    trace->add_option("path", trace_path, "Edge-list file")->required();
    trace->add_option("--measure", trace_measure,
                      "degree-prod|degree-sum|degree-log|closeness-prod|closeness-sum|"
                      "closeness-log")
        ->required();
    add_grid_options(trace, trace_grid);
    trace->add_flag("--no-invert-weights", trace_no_invert,
                    "Use raw weights for closeness distances");
    trace->add_flag("--directed", trace_directed, "Read arcs and symmetrize");
    trace->add_flag("--force", trace_force, "Evaluate outside the safe interval");

    // generate
    std::string gen_model = "er_normal", gen_out;
    alphacent::ModelConfig gen_cfg;
    std::optional<std::uint64_t> gen_seed;
    auto* generate = app.add_subcommand("generate", "Write a random graph as an edge list");
    generate->add_option("--model", gen_model, "er_normal | wrg")
        ->check(CLI::IsMember({"er_normal", "wrg"}));
    generate->add_option("--n", gen_cfg.n, "Node count");
    generate->add_option("--p", gen_cfg.p, "Connection probability in (0, 1)");
    generate->add_option("--mu", gen_cfg.mu, "Mean weight (er_normal)");
    generate->add_option("--sigma", gen_cfg.sigma, "Weight standard deviation (er_normal)");
    generate->add_option("--seed", gen_seed, "Seed (default: drawn and printed)");
    generate->add_flag("--require-connected", gen_cfg.require_connected,
                       "Regenerate until connected");
    generate->add_option("--max-retries", gen_cfg.max_retries,
                         "Generation attempts when --require-connected");
    generate->add_option("--out", gen_out, "Output edge-list path")->required();

    // rewire
    std::string rewire_path, rewire_out;
    std::size_t rewire_swaps = 0;
    std::optional<std::uint64_t> rewire_seed;
    bool rewire_directed = false;
    auto* rewire_cmd = app.add_subcommand("rewire",
                                          "Degree-preserving rewiring surrogate of a network");
    rewire_cmd->add_option("path", rewire_path, "Edge-list file")->required();
    rewire_cmd->add_option("--swaps", rewire_swaps, "Applied swap count")->required();
    rewire_cmd->add_option("--seed", rewire_seed, "Seed (default: drawn and printed)");
    rewire_cmd->add_flag("--directed", rewire_directed, "Read arcs and symmetrize");
    rewire_cmd->add_option("--out", rewire_out, "Output edge-list path")->required();

    // sweep
    std::string sweep_spec_path, sweep_records = "sweep_records.csv",
                sweep_summary = "sweep_summary.csv";
    std::optional<std::uint64_t> sweep_seed;
    auto* sweep = app.add_subcommand("sweep", "Replicated parameter sweep from a spec file");
    sweep->add_option("spec", sweep_spec_path, "key=value spec file")->required();
    sweep->add_option("--records", sweep_records, "Per-replicate CSV ('-' for stdout)");
    sweep->add_option("--summary", sweep_summary, "Per-value summary CSV ('-' for stdout)");
    sweep->add_option("--seed", sweep_seed, "Override the spec's base seed");

    // variance-trace
    std::string var_path;
    bool var_no_invert = false, var_directed = false, var_force = false;
    GridArgs var_grid;
    auto* variance = app.add_subcommand("variance-trace",
                                        "Across-node variance of all six measures per alpha");
    variance->add_option("path", var_path, "Edge-list file")->required();
    add_grid_options(variance, var_grid);
    variance->add_flag("--no-invert-weights", var_no_invert,
                       "Use raw weights for closeness distances");
    variance->add_flag("--directed", var_directed, "Read arcs and symmetrize");
    variance->add_flag("--force", var_force, "Evaluate outside the safe interval");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze) {
            const alphacent::WeightedGraph g = load_graph(analyze_path, analyze_directed);
            const alphacent::NetworkReport report =
                alphacent::analyze_network(g, !analyze_no_invert);
            alphacent::write_analyze_csv(report, std::cout);
            if (!analyze_values_out.empty()) {
                alphacent::ProfileTraceOptions opt;
                if (analyze_measures.empty())
                    throw alphacent::parse_error("--values-out needs --measures");
                std::stringstream names(analyze_measures);
                std::string name;
                while (std::getline(names, name, ','))
                    opt.kinds.push_back(alphacent::parse_measure(name));
                opt.alpha_min = analyze_grid.alpha_min;
                opt.alpha_max = analyze_grid.alpha_max;
                opt.steps = analyze_grid.steps;
                opt.invert_weights = !analyze_no_invert;
                opt.force = analyze_force;
                std::ofstream file;
                alphacent::write_profile_csv(g, opt, stream_or_stdout(analyze_values_out, file));
            }
        } else if (*trace) {
            const alphacent::WeightedGraph g = load_graph(trace_path, trace_directed);
            alphacent::RankTraceOptions opt;
            opt.kind = alphacent::parse_measure(trace_measure);
            opt.alpha_min = trace_grid.alpha_min;
            opt.alpha_max = trace_grid.alpha_max;
            opt.steps = trace_grid.steps;
            opt.invert_weights = !trace_no_invert;
            opt.force = trace_force;
            alphacent::write_rank_trace_csv(g, opt, std::cout);
        } else if (*generate) {
            gen_cfg.seed = effective_seed(gen_seed);
            const alphacent::WeightedGraph g =
                gen_model == "wrg" ? alphacent::wrg(gen_cfg) : alphacent::er_normal(gen_cfg);
            write_graph(g, gen_out);
            std::cout << "seed: " << gen_cfg.seed << "\n";
        } else if (*rewire_cmd) {
            const alphacent::WeightedGraph g = load_graph(rewire_path, rewire_directed);
            const std::uint64_t seed = effective_seed(rewire_seed);
            write_graph(alphacent::rewire(g, rewire_swaps, seed), rewire_out);
            std::cout << "seed: " << seed << "\n" << "swaps: " << rewire_swaps << "\n";
        } else if (*sweep) {
            std::ifstream in(sweep_spec_path);
            if (!in) throw alphacent::parse_error("cannot open '" + sweep_spec_path + "'");
            alphacent::SweepSpec spec = alphacent::parse_sweep_spec(in);
            if (sweep_seed) spec.seed = *sweep_seed;
            std::ofstream records_file, summary_file;
            std::ostream& records = stream_or_stdout(sweep_records, records_file);
            std::ostream& summary = stream_or_stdout(sweep_summary, summary_file);
            alphacent::run_sweep(spec, records, summary);
        } else if (*variance) {
            const alphacent::WeightedGraph g = load_graph(var_path, var_directed);
            alphacent::VarianceTraceOptions opt;
            opt.alpha_min = var_grid.alpha_min;
            opt.alpha_max = var_grid.alpha_max;
            opt.steps = var_grid.steps;
            opt.invert_weights = !var_no_invert;
            opt.force = var_force;
            alphacent::write_variance_trace_csv(g, opt, std::cout);
        }
    } catch (const alphacent::computability_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return 0;
}
