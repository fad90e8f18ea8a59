// bcmc: exact betweenness centrality, single-vertex Metropolis-Hastings
// estimation, joint relative-score estimation, and verification suites.
// Structured JSON goes to stdout, a short human summary to stderr.
// Exit codes: 0 success, 1 assertion/estimation failure, 2 input error.

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcmc/brandes.hpp"
#include "bcmc/graph.hpp"
#include "bcmc/joint_chain.hpp"
#include "bcmc/rng.hpp"
#include "bcmc/single_chain.hpp"
#include "bcmc/testkit/generators.hpp"
#include "bcmc/testkit/verify.hpp"
#include "json_writer.hpp"

namespace {

using bcmc::tools::JsonWriter;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInputError = 2;
constexpr std::uint64_t kDefaultSeed = 1;

struct GraphOptions {
    std::string file;
    std::string generator;
    bool weighted = false;
};

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start).count(); }
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("BCMC_SEED")) {
        std::uint64_t value = 0;
        const char* end = env + std::string_view(env).size();
        auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec != std::errc() || ptr != end) {
            throw bcmc::InvalidParameterError("BCMC_SEED is not an unsigned integer: '" +
                                              std::string(env) + "'");
        }
        return value;
    }
    return kDefaultSeed;
}

bcmc::Graph load_graph(const GraphOptions& opts) {
    if (!opts.file.empty() && !opts.generator.empty()) {
        throw bcmc::InvalidParameterError("--graph and --gen are mutually exclusive");
    }
    if (!opts.generator.empty()) {
        if (opts.weighted) {
            throw bcmc::InvalidParameterError("generated graphs are unweighted; --weighted needs --graph");
        }
        bcmc::Graph g = bcmc::testkit::generate(opts.generator);
        bcmc::assert_connected(g);
        return g;
    }
    if (opts.file.empty()) {
        throw bcmc::InvalidParameterError("one of --graph or --gen is required");
    }
    std::ifstream in(opts.file);
    if (!in) throw bcmc::InvalidParameterError("cannot open graph file '" + opts.file + "'");
    bcmc::Graph g = bcmc::parse_edge_list(in, opts.weighted);
    bcmc::assert_connected(g);
    return g;
}

void write_graph_block(JsonWriter& w, const bcmc::Graph& g) {
    w.key("graph").begin_object();
    w.kv("n", static_cast<std::uint64_t>(g.vertex_count()));
    w.kv("m", static_cast<std::uint64_t>(g.edge_count()));
    w.kv("weighted", g.weighted());
    w.end_object();
}

void write_graph_params(JsonWriter& w, const GraphOptions& opts) {
    if (!opts.generator.empty()) {
        w.kv("generator", opts.generator);
    } else {
        w.kv("graph_file", opts.file);
    }
    w.kv("weighted", opts.weighted);
}

void emit(const JsonWriter& w) { std::cout << w.str() << "\n"; }

// ---------------------------------------------------------------------------
// exact

struct ExactOptions {
    GraphOptions graph;
    std::string vertex;
};

int cmd_exact(const ExactOptions& opts) {
    Timer total;
    Timer load;
    const bcmc::Graph g = load_graph(opts.graph);
    const double load_seconds = load.seconds();

    JsonWriter w;
    w.begin_object();
    w.kv("schema_version", std::uint64_t{1});
    w.kv("command", "exact");
    w.key("params").begin_object();
    write_graph_params(w, opts.graph);
    if (!opts.vertex.empty()) w.kv("vertex", opts.vertex);
    w.end_object();
    write_graph_block(w, g);

    Timer compute;
    w.key("results").begin_object();
    if (!opts.vertex.empty()) {
        const bcmc::Vertex r = g.require(opts.vertex);
        const double bc = bcmc::exact_betweenness_single(g, r);
        w.kv("vertex", opts.vertex);
        w.kv("betweenness", bc);
        std::cerr << "exact betweenness of '" << opts.vertex << "': " << bc << "\n";
    } else {
        const bcmc::BetweennessVector bc = bcmc::exact_betweenness(g);
        w.key("betweenness").begin_object();
        for (bcmc::Vertex v = 0; v < g.vertex_count(); ++v) w.kv(g.label(v), bc.values[v]);
        w.end_object();
        std::cerr << "exact betweenness of " << g.vertex_count() << " vertices computed\n";
    }
    w.end_object();
    const double compute_seconds = compute.seconds();

    w.key("timing").begin_object();
    w.kv("load_seconds", load_seconds);
    w.kv("compute_seconds", compute_seconds);
    w.kv("total_seconds", total.seconds());
    w.end_object();
    w.end_object();
    emit(w);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// estimate

struct EstimateOptions {
    GraphOptions graph;
    std::string vertex;
    std::optional<std::uint64_t> iterations;
    std::optional<double> epsilon;
    std::optional<double> delta;
    std::optional<double> mu_override;
    std::optional<std::uint64_t> seed;
    bool exact_check = false;
};

int cmd_estimate(const EstimateOptions& opts) {
    Timer total;
    if (opts.iterations && (opts.epsilon || opts.delta)) {
        throw bcmc::InvalidParameterError("--T and --epsilon/--delta are mutually exclusive");
    }
    if (!opts.iterations && !(opts.epsilon && opts.delta)) {
        throw bcmc::InvalidParameterError("either --T or both --epsilon and --delta are required");
    }

    Timer load;
    const bcmc::Graph g = load_graph(opts.graph);
    const double load_seconds = load.seconds();
    const bcmc::Vertex r = g.require(opts.vertex);
    const std::uint64_t seed = resolve_seed(opts.seed);

    JsonWriter w;
    w.begin_object();
    w.kv("schema_version", std::uint64_t{1});
    w.kv("command", "estimate");
    w.key("params").begin_object();
    write_graph_params(w, opts.graph);
    w.kv("vertex", opts.vertex);
    if (opts.iterations) w.kv("T", *opts.iterations);
    if (opts.epsilon) w.kv("epsilon", *opts.epsilon);
    if (opts.delta) w.kv("delta", *opts.delta);
    if (opts.mu_override) w.kv("mu_override", *opts.mu_override);
    w.kv("seed", seed);
    w.kv("rng", bcmc::SplitMix64::algorithm_name);
    w.kv("exact_check", opts.exact_check);
    w.end_object();
    write_graph_block(w, g);

    // Planning: with epsilon/delta the chain length comes from the sample
    // bound; mu is either caller-supplied or computed exactly (which costs as
    // much as one exact betweenness pass and is reported as such).
    Timer plan;
    std::uint64_t iterations = 0;
    std::optional<double> mu;
    std::optional<double> planned_tail;
    std::string mu_source;
    bool traffic_free = false;
    if (opts.iterations) {
        iterations = *opts.iterations;
    } else {
        if (opts.mu_override) {
            mu = *opts.mu_override;
            mu_source = "override";
        } else {
            try {
                mu = bcmc::mu_exact(g, r).mu;
                mu_source = "exact";
            } catch (const bcmc::AllZeroDependencyError&) {
                traffic_free = true;
            }
        }
        if (mu) {
            iterations = bcmc::required_samples(*opts.epsilon, *opts.delta, *mu);
            planned_tail = bcmc::tail_bound(*opts.epsilon, iterations, *mu);
        }
    }
    const double plan_seconds = plan.seconds();

    Timer run;
    std::optional<bcmc::ChainTrace> trace;
    if (!traffic_free) {
        bcmc::ChainConfig cfg;
        cfg.target = r;
        cfg.iterations = iterations;
        cfg.seed = seed;
        cfg.epsilon = opts.epsilon;
        cfg.delta = opts.delta;
        try {
            trace = bcmc::run_chain(g, cfg);
        } catch (const bcmc::AllZeroDependencyError&) {
            traffic_free = true;
        }
    }
    const double run_seconds = run.seconds();

    w.key("results").begin_object();
    double estimate = 0.0;
    if (traffic_free) {
        w.kv("estimate", 0.0);
        w.kv("traffic_free", true);
    } else {
        estimate = bcmc::estimate_betweenness(*trace, g);
        w.kv("estimate", estimate);
        w.kv("traffic_free", false);
        w.kv("iterations", iterations);
        w.kv("chain_states", static_cast<std::uint64_t>(trace->states.size()));
        w.kv("accepted", trace->accepted);
        w.kv("acceptance_rate",
             static_cast<double>(trace->accepted) / static_cast<double>(iterations));
        w.kv("distinct_sources", static_cast<std::uint64_t>(trace->dependency.size()));
    }
    if (mu) {
        w.key("planning").begin_object();
        w.kv("mu", *mu);
        w.kv("mu_source", mu_source);
        w.kv("planned_iterations", iterations);
        w.kv("tail_bound", *planned_tail);
        w.end_object();
    }
    if (opts.exact_check) {
        const double exact = bcmc::exact_betweenness_single(g, r);
        w.key("exact").begin_object();
        w.kv("betweenness", exact);
        w.kv("absolute_error", std::abs(estimate - exact));
        w.end_object();
    }
    w.end_object();

    w.key("timing").begin_object();
    w.kv("load_seconds", load_seconds);
    w.kv("plan_seconds", plan_seconds);
    w.kv("run_seconds", run_seconds);
    w.kv("total_seconds", total.seconds());
    w.end_object();
    w.end_object();
    emit(w);

    if (traffic_free) {
        std::cerr << "vertex '" << opts.vertex << "' carries no shortest-path traffic; estimate is 0\n";
    } else {
        std::cerr << "estimate " << estimate << " after " << iterations << " iterations (seed " << seed
                  << ")\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// relative

struct RelativeOptions {
    GraphOptions graph;
    std::string set_csv;
    std::uint64_t iterations = 0;
    std::optional<std::uint64_t> seed;
    bool exact_check = false;
};

std::vector<std::string> split_labels(const std::string& csv) {
    std::vector<std::string> labels;
    std::string current;
    for (char c : csv) {
        if (c == ',') {
            if (!current.empty()) labels.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) labels.push_back(current);
    return labels;
}

int cmd_relative(const RelativeOptions& opts) {
    Timer total;
    Timer load;
    const bcmc::Graph g = load_graph(opts.graph);
    const double load_seconds = load.seconds();

    const std::vector<std::string> labels = split_labels(opts.set_csv);
    if (labels.size() < 2) {
        throw bcmc::InvalidParameterError("--set needs at least 2 comma-separated vertices");
    }
    std::vector<bcmc::Vertex> targets;
    targets.reserve(labels.size());
    for (const std::string& label : labels) targets.push_back(g.require(label));
    const std::uint64_t seed = resolve_seed(opts.seed);

    JsonWriter w;
    w.begin_object();
    w.kv("schema_version", std::uint64_t{1});
    w.kv("command", "relative");
    w.key("params").begin_object();
    write_graph_params(w, opts.graph);
    w.key("set").begin_array();
    for (const std::string& label : labels) w.value(label);
    w.end_array();
    w.kv("T", opts.iterations);
    w.kv("seed", seed);
    w.kv("rng", bcmc::SplitMix64::algorithm_name);
    w.kv("exact_check", opts.exact_check);
    w.end_object();
    write_graph_block(w, g);

    Timer run;
    const bcmc::JointChainTrace trace = bcmc::run_joint_chain(g, targets, opts.iterations, seed);
    const double run_seconds = run.seconds();

    w.key("results").begin_object();
    w.kv("iterations", opts.iterations);
    w.kv("accepted", trace.accepted);
    w.kv("acceptance_rate",
         static_cast<double>(trace.accepted) / static_cast<double>(opts.iterations));
    w.key("strata").begin_object();
    for (std::size_t i = 0; i < targets.size(); ++i) {
        w.kv(labels[i], static_cast<std::uint64_t>(trace.strata[i].size()));
    }
    w.end_object();

    w.key("pairs").begin_array();
    for (std::size_t i = 0; i < targets.size(); ++i) {
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            const bcmc::RelativeScoreReport pair = bcmc::relative_report(trace, targets[i], targets[j]);
            w.begin_object();
            w.kv("r_i", labels[i]);
            w.kv("r_j", labels[j]);
            w.kv("samples_i", pair.samples_i);
            w.kv("samples_j", pair.samples_j);
            if (pair.rel_ij) w.kv("relative_ij", *pair.rel_ij); else w.kv_null("relative_ij");
            if (pair.rel_ji) w.kv("relative_ji", *pair.rel_ji); else w.kv_null("relative_ji");
            if (pair.ratio) w.kv("ratio", *pair.ratio); else w.kv_null("ratio");
            w.kv("zero_denominator", pair.rel_ij && pair.rel_ji && *pair.rel_ji == 0.0);
            if (opts.exact_check) {
                w.kv("exact_relative_ij", bcmc::relative_betweenness(g, targets[i], targets[j]));
                w.kv("exact_relative_ji", bcmc::relative_betweenness(g, targets[j], targets[i]));
                try {
                    auto [lhs, rhs] = bcmc::betweenness_ratio_identity(g, targets[i], targets[j]);
                    w.kv("exact_ratio", lhs);
                    w.kv("identity_rhs", rhs);
                } catch (const bcmc::Error&) {
                    w.kv_null("exact_ratio");
                    w.kv_null("identity_rhs");
                }
            }
            w.end_object();
        }
    }
    w.end_array();
    w.end_object();

    w.key("timing").begin_object();
    w.kv("load_seconds", load_seconds);
    w.kv("run_seconds", run_seconds);
    w.kv("total_seconds", total.seconds());
    w.end_object();
    w.end_object();
    emit(w);

    std::cerr << "joint chain of " << opts.iterations << " iterations over " << labels.size()
              << " targets (seed " << seed << ")\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string suite;
    std::optional<std::uint64_t> seed;
};

int cmd_verify(const VerifyOptions& opts) {
    Timer total;
    const std::uint64_t seed = resolve_seed(opts.seed);

    bcmc::testkit::SuiteReport report;
    if (opts.suite == "oracle") {
        report = bcmc::testkit::verify_oracle(seed);
    } else if (opts.suite == "kernel") {
        report = bcmc::testkit::verify_kernel();
    } else if (opts.suite == "coverage") {
        report = bcmc::testkit::verify_coverage(seed);
    } else if (opts.suite == "theorem2") {
        report = bcmc::testkit::verify_theorem2(seed);
    } else if (opts.suite == "theorem3") {
        report = bcmc::testkit::verify_theorem3();
    } else {
        throw bcmc::InvalidParameterError(
            "unknown suite '" + opts.suite + "' (expected oracle|kernel|coverage|theorem2|theorem3)");
    }

    std::uint64_t passed = 0;
    for (const bcmc::testkit::Check& check : report.checks) {
        if (check.pass) ++passed;
        std::cerr << (check.pass ? "[PASS] " : "[FAIL] ") << report.suite << "." << check.name
                  << " observed=" << check.observed << " threshold=" << check.threshold;
        if (!check.detail.empty()) std::cerr << " (" << check.detail << ")";
        std::cerr << "\n";
    }

    JsonWriter w;
    w.begin_object();
    w.kv("schema_version", std::uint64_t{1});
    w.kv("command", "verify");
    w.key("params").begin_object();
    w.kv("suite", opts.suite);
    w.kv("seed", seed);
    w.kv("rng", bcmc::SplitMix64::algorithm_name);
    w.end_object();
    w.key("results").begin_object();
    w.key("checks").begin_array();
    for (const bcmc::testkit::Check& check : report.checks) {
        w.begin_object();
        w.kv("name", check.name);
        w.kv("pass", check.pass);
        w.kv("observed", check.observed);
        w.kv("threshold", check.threshold);
        if (!check.detail.empty()) w.kv("detail", check.detail);
        w.end_object();
    }
    w.end_array();
    w.kv("passed", passed);
    w.kv("failed", static_cast<std::uint64_t>(report.checks.size() - passed));
    w.end_object();
    w.key("timing").begin_object();
    w.kv("total_seconds", total.seconds());
    w.end_object();
    w.end_object();
    emit(w);

    return report.all_pass() ? kExitOk : kExitFailure;
}

void add_graph_options(CLI::App* cmd, GraphOptions& opts) {
    cmd->add_option("--graph", opts.file, "edge-list file ('u v' per line, '# ' comments)");
    cmd->add_option("--gen", opts.generator,
                    "generator spec, e.g. path:4, star:8, gnp:8:0.4:7, two_blocks_cut:5:5");
    cmd->add_flag("--weighted", opts.weighted, "parse a third positive-weight column");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"betweenness centrality: exact computation and Metropolis-Hastings estimation"};
    app.require_subcommand(1);

    ExactOptions exact_opts;
    CLI::App* exact = app.add_subcommand("exact", "exact betweenness of one vertex or all vertices");
    add_graph_options(exact, exact_opts.graph);
    exact->add_option("--vertex", exact_opts.vertex, "restrict to one vertex label");

    EstimateOptions est_opts;
    CLI::App* estimate = app.add_subcommand("estimate", "estimate one vertex's betweenness by sampling");
    add_graph_options(estimate, est_opts.graph);
    estimate->add_option("--vertex", est_opts.vertex, "target vertex label")->required();
    estimate->add_option("--T", est_opts.iterations, "chain iterations");
    estimate->add_option("--epsilon", est_opts.epsilon, "additive error target");
    estimate->add_option("--delta", est_opts.delta, "failure probability in (0,1)");
    estimate->add_option("--mu", est_opts.mu_override,
                         "concentration bound override (skips the exact-cost planning pass)");
    estimate->add_option("--seed", est_opts.seed, "RNG seed (default: BCMC_SEED or 1)");
    estimate->add_flag("--exact-check", est_opts.exact_check, "also compute the exact value");

    RelativeOptions rel_opts;
    CLI::App* relative = app.add_subcommand("relative", "relative scores of a vertex set via one joint chain");
    add_graph_options(relative, rel_opts.graph);
    relative->add_option("--set", rel_opts.set_csv, "comma-separated vertex labels (>= 2)")->required();
    relative->add_option("--T", rel_opts.iterations, "chain iterations")->required();
    relative->add_option("--seed", rel_opts.seed, "RNG seed (default: BCMC_SEED or 1)");
    relative->add_flag("--exact-check", rel_opts.exact_check, "also compute exact relative scores");

    VerifyOptions ver_opts;
    CLI::App* verify = app.add_subcommand("verify", "run a property suite; nonzero exit on failure");
    verify->add_option("suite", ver_opts.suite, "oracle|kernel|coverage|theorem2|theorem3")->required();
    verify->add_option("--seed", ver_opts.seed, "base seed for the seeded suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*exact) return cmd_exact(exact_opts);
        if (*estimate) return cmd_estimate(est_opts);
        if (*relative) return cmd_relative(rel_opts);
        if (*verify) return cmd_verify(ver_opts);
    } catch (const bcmc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const bcmc::DisconnectedGraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const bcmc::UnknownVertexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const bcmc::InvalidParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const bcmc::TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const bcmc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitInputError;
}
