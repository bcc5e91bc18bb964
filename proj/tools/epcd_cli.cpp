// epcd: command-line front end for extreme-point community detection.
//
//   epcd detect GRAPH [--method ep|aep|scr|les] [--criterion bm|dc|ng|ex] [--truth FILE]
//   epcd simulate [--config FILE] [flags] --methods ep,aep,scr --criteria bm,dc --out out.csv
//   epcd generate [--config FILE] [flags] --out PREFIX
//   epcd embed GRAPH --out embedding.csv
//
// Exit codes: 0 success, 1 computational failure, 2 usage or I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "epcd/baselines.hpp"
#include "epcd/benchmark.hpp"
#include "epcd/detect.hpp"
#include "epcd/error.hpp"
#include "epcd/graph.hpp"
#include "epcd/labels.hpp"
#include "epcd/metrics.hpp"
#include "epcd/models.hpp"
#include "epcd/spectral.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Raised for bad flag values discovered after CLI11 parsing.
struct UsageError : epcd::Error {
    using epcd::Error::Error;
};

struct DetectArgs {
    std::string graph;
    std::string method = "ep";
    std::string criterion = "bm";
    double epsilon = epcd::kDefaultEpsilon;
    std::uint64_t seed = 1;
    std::size_t restarts = epcd::kDefaultKMeansRestarts;
    std::string truth;
    std::string out;
    bool lcc = false;
};

struct SimArgs {
    std::string config;
    std::vector<std::string> sets;
    std::optional<std::size_t> n, n1, n2;
    std::optional<double> r, lambda, gamma;
    std::string w;
    std::string preset;
    std::vector<std::string> methods{"ep", "aep", "scr"};
    std::vector<std::string> criteria{"bm"};
    std::vector<double> r_grid;
    std::vector<double> lambda_grid;
    double epsilon = epcd::kDefaultEpsilon;
    std::size_t reps = 100;
    std::uint64_t seed = 1;
    std::size_t jobs = 1;
    std::size_t restarts = epcd::kDefaultKMeansRestarts;
    std::string out;
    bool timing = false;
};

struct EmbedArgs {
    std::string graph;
    double epsilon = epcd::kDefaultEpsilon;
    std::uint64_t seed = 1;
    std::string out;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw epcd::IoError("cannot write '" + path + "'");
    return out;
}

void add_config_flags(CLI::App* cmd, SimArgs& args) {
    cmd->add_option("--config", args.config, "Key-value config file");
    cmd->add_option("--preset", args.preset, "Named preset (extraction)");
    cmd->add_option("--n", args.n, "Total nodes, split evenly");
    cmd->add_option("--n1", args.n1, "Community 1 size");
    cmd->add_option("--n2", args.n2, "Community 2 size");
    cmd->add_option("--w", args.w, "Community weights 'w1,w2'");
    cmd->add_option("--r", args.r, "Out-in probability ratio");
    cmd->add_option("--lambda", args.lambda, "Expected average degree");
    cmd->add_option("--gamma", args.gamma, "Probability of a low degree parameter");
    cmd->add_option("--set", args.sets, "Extra key=value config entries");
    cmd->add_option("--seed", args.seed, "Base seed");
}

epcd::SimConfig build_config(const SimArgs& args) {
    epcd::SimConfig c;
    auto set = [&](const std::string& key, const std::string& value) {
        try {
            epcd::set_config_value(c, key, value);
        } catch (const epcd::Error& e) {
            throw UsageError(e.what());
        }
    };
    if (!args.preset.empty()) {
        if (args.lambda) c.lambda = *args.lambda;
        set("preset", args.preset);
    }
    if (!args.config.empty()) {
        try {
            c = epcd::load_sim_config_file(args.config, c);
        } catch (const epcd::ParseError& e) {
            throw UsageError(args.config + ": " + e.what());
        }
    }
    if (args.n) set("n", std::to_string(*args.n));
    if (args.n1) c.n1 = *args.n1;
    if (args.n2) c.n2 = *args.n2;
    if (!args.w.empty()) set("w", args.w);
    if (args.r) c.r = *args.r;
    if (args.lambda) c.lambda = *args.lambda;
    if (args.gamma) c.gamma = *args.gamma;
    for (const auto& kv : args.sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--set expects key=value, got '" + kv + "'");
        set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    c.seed = args.seed;
    try {
        c.validate();
    } catch (const epcd::Error& e) {
        throw UsageError(e.what());
    }
    return c;
}

int cmd_detect(const DetectArgs& args) {
    const epcd::EdgeListLoad load = epcd::load_edge_list_file(args.graph);
    if (load.self_loops_dropped > 0) {
        std::cerr << "warning: dropped " << load.self_loops_dropped << " self-loop(s)\n";
    }

    epcd::Method method;
    try {
        if (args.method == "ep") {
            method = {epcd::MethodKind::EP, epcd::parse_criterion(args.criterion)};
        } else {
            epcd::parse_criterion(args.criterion);
            method = epcd::parse_method(args.method);
        }
    } catch (const epcd::Error& e) {
        throw UsageError(e.what());
    }

    epcd::Graph graph = load.graph;
    std::vector<epcd::NodeId> mapping;
    if (args.lcc) {
        epcd::Component component = epcd::largest_connected_component(load.graph);
        graph = std::move(component.graph);
        mapping = std::move(component.mapping);
    }

    epcd::MethodParams params;
    params.epsilon = args.epsilon;
    params.seed = args.seed;
    params.restarts = args.restarts;
    const epcd::MethodOutcome outcome = epcd::run_method(graph, method, params);

    if (!args.out.empty()) {
        std::ofstream out = open_output(args.out);
        epcd::write_labels(out, outcome.labels);
    } else {
        epcd::write_labels(std::cout, outcome.labels);
    }

    std::ostringstream summary;
    summary << "method=" << method.name() << " nodes=" << graph.num_nodes() << " edges=" << graph.num_edges();
    if (outcome.objective_value) summary << " objective=" << std::setprecision(12) << *outcome.objective_value;
    if (method.kind == epcd::MethodKind::EP) summary << " candidates=" << outcome.candidates_evaluated;

    if (!args.truth.empty()) {
        epcd::Labels truth = epcd::load_labels_file(args.truth);
        if (args.lcc) {
            if (truth.size() != load.graph.num_nodes()) {
                throw UsageError("truth file has " + std::to_string(truth.size()) + " labels for " +
                                 std::to_string(load.graph.num_nodes()) + " nodes");
            }
            epcd::Labels restricted;
            restricted.reserve(mapping.size());
            for (epcd::NodeId id : mapping) restricted.push_back(truth[id]);
            truth = std::move(restricted);
        }
        if (truth.size() != outcome.labels.size()) {
            throw UsageError("truth file has " + std::to_string(truth.size()) + " labels for " +
                             std::to_string(outcome.labels.size()) + " nodes");
        }
        summary << std::setprecision(6) << " nmi=" << epcd::nmi(truth, outcome.labels)
                << " misclustered=" << epcd::misclustered_fraction(truth, outcome.labels);
    }
    (args.out.empty() ? std::cerr : std::cout) << summary.str() << '\n';
    return 0;
}

int cmd_simulate(const SimArgs& args) {
    epcd::SimulationPlan plan;
    plan.config = build_config(args);
    try {
        plan.methods = epcd::expand_methods(args.methods, args.criteria);
    } catch (const epcd::Error& e) {
        throw UsageError(e.what());
    }
    plan.r_grid = args.r_grid;
    plan.lambda_grid = args.lambda_grid;
    plan.reps = args.reps;
    plan.seed = args.seed;
    plan.jobs = args.jobs;
    plan.params.epsilon = args.epsilon;
    plan.params.restarts = args.restarts;
    plan.timing = args.timing;

    std::unique_ptr<std::ofstream> file;
    if (!args.out.empty()) file = std::make_unique<std::ofstream>(open_output(args.out));

    const auto rows = epcd::run_simulation(plan);
    if (file) {
        epcd::write_csv(*file, rows);
    } else {
        epcd::write_csv(std::cout, rows);
    }

    std::ostream& log = file ? std::cout : std::cerr;
    log << std::left << std::setw(8) << "r" << std::setw(8) << "lambda" << std::setw(8) << "method" << std::setw(7)
        << "reps" << std::setw(11) << "mean_nmi" << std::setw(10) << "sd_nmi" << "mean_miscl\n";
    log << std::fixed;
    for (const auto& s : epcd::summarize(rows)) {
        log << std::setprecision(3) << std::setw(8) << s.r << std::setw(8) << s.lambda << std::setw(8) << s.method
            << std::setw(7) << s.count << std::setprecision(4) << std::setw(11) << s.mean_nmi << std::setw(10)
            << s.sd_nmi << s.mean_misclustered << '\n';
    }
    return 0;
}

int cmd_generate(const SimArgs& args) {
    const epcd::SimConfig config = build_config(args);
    const epcd::SampledGraph sample = epcd::sample_dcsbm(config);
    {
        std::ofstream out = open_output(args.out + ".edges");
        epcd::write_edge_list(out, sample.graph);
    }
    {
        std::ofstream out = open_output(args.out + ".labels");
        epcd::write_labels(out, sample.truth);
    }
    {
        std::ofstream out = open_output(args.out + ".theta");
        out << std::setprecision(17);
        for (double t : sample.theta) out << t << '\n';
    }
    std::cout << "nodes=" << sample.graph.num_nodes() << " edges=" << sample.graph.num_edges() << " mean_degree="
              << static_cast<double>(sample.graph.total_degree()) / static_cast<double>(sample.graph.num_nodes())
              << '\n';
    return 0;
}

int cmd_embed(const EmbedArgs& args) {
    const epcd::EdgeListLoad load = epcd::load_edge_list_file(args.graph);
    const epcd::Embedding emb = epcd::embedding(load.graph, args.epsilon, epcd::kDefaultTolerance, args.seed);
    std::unique_ptr<std::ofstream> file;
    if (!args.out.empty()) file = std::make_unique<std::ofstream>(open_output(args.out));
    std::ostream& out = file ? *file : std::cout;
    out << std::setprecision(17);
    for (Eigen::Index row = 0; row < 2; ++row) {
        for (Eigen::Index i = 0; i < emb.basis.cols(); ++i) out << (i ? "," : "") << emb.basis(row, i);
        out << '\n';
    }
    std::cerr << "tau=" << emb.tau << " eigenvalues=" << emb.eigenvalues[0] << ',' << emb.eigenvalues[1]
              << (emb.near_degenerate ? " near-degenerate" : "") << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Community detection by extreme points of the projected label cube"};
    app.require_subcommand(1);

    DetectArgs detect;
    auto* detect_cmd = app.add_subcommand("detect", "Detect two communities in an edge-list graph");
    detect_cmd->add_option("graph", detect.graph, "Edge list file")->required();
    detect_cmd->add_option("--method", detect.method, "ep, aep, scr or les");
    detect_cmd->add_option("--criterion", detect.criterion, "bm, dc, ng or ex (ep only)");
    detect_cmd->add_option("--epsilon", detect.epsilon, "Regularization fraction in (0, 1)");
    detect_cmd->add_option("--seed", detect.seed, "Eigensolver and k-means seed");
    detect_cmd->add_option("--restarts", detect.restarts, "k-means restarts (scr)");
    detect_cmd->add_option("--truth", detect.truth, "True labels file for scoring");
    detect_cmd->add_option("--out", detect.out, "Labels output file (default stdout)");
    detect_cmd->add_flag("--lcc", detect.lcc, "Restrict to the largest connected component");

    SimArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Benchmark methods on simulated block-model graphs");
    add_config_flags(sim_cmd, sim);
    sim_cmd->add_option("--methods", sim.methods, "Methods: ep, ep-<criterion>, aep, scr, les")->delimiter(',');
    sim_cmd->add_option("--criteria", sim.criteria, "Criteria applied to bare 'ep'")->delimiter(',');
    sim_cmd->add_option("--r-grid", sim.r_grid, "Sweep over r values")->delimiter(',');
    sim_cmd->add_option("--lambda-grid", sim.lambda_grid, "Sweep over lambda values")->delimiter(',');
    sim_cmd->add_option("--epsilon", sim.epsilon, "Regularization fraction in (0, 1)");
    sim_cmd->add_option("--reps", sim.reps, "Replications per setting");
    sim_cmd->add_option("--jobs", sim.jobs, "Worker threads");
    sim_cmd->add_option("--restarts", sim.restarts, "k-means restarts (scr)");
    sim_cmd->add_option("--out", sim.out, "CSV output file (default stdout)");
    sim_cmd->add_flag("--timing", sim.timing, "Record wall-clock time per method");

    SimArgs gen;
    auto* gen_cmd = app.add_subcommand("generate", "Sample one block-model graph");
    add_config_flags(gen_cmd, gen);
    gen_cmd->add_option("--out", gen.out, "Output prefix (.edges, .labels, .theta)")->required();

    EmbedArgs embed;
    auto* embed_cmd = app.add_subcommand("embed", "Dump the 2 x n spectral embedding as CSV");
    embed_cmd->add_option("graph", embed.graph, "Edge list file")->required();
    embed_cmd->add_option("--epsilon", embed.epsilon, "Regularization fraction in (0, 1)");
    embed_cmd->add_option("--seed", embed.seed, "Eigensolver seed");
    embed_cmd->add_option("--out", embed.out, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*detect_cmd) return cmd_detect(detect);
        if (*sim_cmd) return cmd_simulate(sim);
        if (*gen_cmd) return cmd_generate(gen);
        if (*embed_cmd) return cmd_embed(embed);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const epcd::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const epcd::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
