#include "cat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "cat/error.hpp"
#include "cat/experiments.hpp"
#include "cat/identifiability.hpp"
#include "cat/inference.hpp"
#include "cat/io.hpp"
#include "cat/learner.hpp"
#include "cat/metrics.hpp"
#include "cat/parallel.hpp"
#include "cat/rng.hpp"
#include "cat/scoring.hpp"
#include "cat/simgen.hpp"

namespace cat {

namespace {

struct ScoreFlags {
    std::string input;
    std::string score = "gaussian";
    int k = 5;
    bool split = false;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
};

struct Flags {
    ScoreFlags score;
    std::string out;
    std::string weights_out;
    std::vector<std::string> require;
    std::vector<std::string> forbid;
    std::string root;
    double alpha = 0.05;
    bool piw = false;

    SimConfig sim;
    int tree_type = 2;
    std::string truth_out;

    std::string truth;
    std::string estimate;

    std::string experiment;
    bool coarse = false;
    std::size_t replicates = 0;
    bool quiet = false;
};

void add_score_flags(CLI::App* cmd, ScoreFlags& f) {
    cmd->add_option("--input", f.input, "data CSV with a header row")->required();
    cmd->add_option("--score", f.score, "edge weight")->check(CLI::IsMember({"gaussian", "entropy", "cmi-skeleton"}));
    cmd->add_option("--k", f.k, "nearest neighbours for entropy estimates")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "row shuffle and estimator seed");
    cmd->add_option("--threads", f.threads, "worker threads (default CAT_THREADS, then all cores)");
}

ScoreOptions score_options(const ScoreFlags& f) {
    ScoreOptions opts;
    if (f.score == "entropy") opts.kind = ScoreKind::entropy;
    if (f.score == "cmi-skeleton") opts.kind = ScoreKind::cmi_skeleton;
    opts.split = f.split;
    opts.entropy.k = f.k;
    opts.entropy.seed = f.seed.value_or(0);
    opts.threads = f.threads;
    return opts;
}

// Reads the CSV and applies the seeded row shuffle when a seed is given.
Dataset load(const ScoreFlags& f) {
    Dataset d = read_csv_file(f.input);
    if (f.seed) {
        Rng rng(*f.seed, 0x5f1e);
        const auto order = random_permutation(d.n(), rng);
        d = d.permuted(order);
    }
    return d;
}

Node parse_node(const std::string& text, const std::vector<std::string>& names) {
    const auto named = std::find(names.begin(), names.end(), text);
    if (named != names.end()) return static_cast<Node>(named - names.begin());
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("unknown node '" + text + "'");
    }
    if (used != text.size() || v < 1 || v > static_cast<long long>(names.size())) {
        throw InvalidArgument("unknown node '" + text + "'");
    }
    return static_cast<Node>(v - 1);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) out << text;
    else write_text_file(path, text);
}

int cmd_learn(const Flags& f, std::ostream& out) {
    const Dataset d = load(f.score);
    const LearnResult r = learn(d, score_options(f.score));
    emit(f.out, learn_json(r), out);
    if (!f.weights_out.empty()) write_text_file(f.weights_out, weights_csv(r.weights));
    if (!f.out.empty()) out << "score " << format_number(r.score) << '\n';
    return kExitOk;
}

int cmd_test(const Flags& f, std::ostream& out) {
    const Dataset d = load(f.score);
    std::vector<Edge> required, forbidden;
    for (const auto& s : f.require) required.push_back(parse_edge(s, d.names()));
    for (const auto& s : f.forbid) forbidden.push_back(parse_edge(s, d.names()));
    std::optional<Node> root;
    if (!f.root.empty()) root = parse_node(f.root, d.names());
    const Substructure r = Substructure::make(required, forbidden, root);
    const TestReport report = test_substructure(d, r, f.alpha, score_options(f.score));
    if (!f.out.empty()) write_text_file(f.out, test_json(report));
    out << "psi " << (report.result.reject ? 1 : 0) << '\n'
        << "s_restricted " << format_number(report.result.s_restricted) << '\n'
        << "s_upper " << format_number(report.result.s_upper) << '\n';
    return report.result.reject ? kExitRejected : kExitOk;
}

int cmd_simulate(Flags f, std::ostream& out) {
    f.sim.tree_type = f.tree_type == 1 ? TreeType::type1 : TreeType::type2;
    const Simulation sim = simulate(f.sim);
    std::string truth = f.truth_out;
    if (truth.empty()) truth = std::filesystem::path(f.out).replace_extension(".truth.json").string();
    write_csv_file(f.out, sim.data);
    write_text_file(truth, dag_json(sim.truth));
    out << "wrote " << f.out << " and " << truth << '\n';
    return kExitOk;
}

int cmd_gap(const Flags& f, std::ostream& out) {
    const Dataset d = load(f.score);
    const GapReport g = estimate_identifiability_gap(d, score_options(f.score), f.piw);
    emit(f.out, gap_json(g), out);
    return kExitOk;
}

int cmd_metrics(const Flags& f, std::ostream& out) {
    const Dag truth = read_dag_json(read_text_file(f.truth));
    const Dag est = read_dag_json(read_text_file(f.estimate));
    if (truth.size() != est.size()) throw DimensionMismatchError("truth and estimate have different node counts");
    emit(f.out, metrics_json(compare(truth, est)), out);
    return kExitOk;
}

int cmd_reproduce(const Flags& f, std::ostream& out, std::ostream& err) {
    const auto names = experiment_names();
    if (std::find(names.begin(), names.end(), f.experiment) == names.end()) {
        throw InvalidArgument("unknown experiment '" + f.experiment + "'");
    }
    ExperimentOptions opts;
    opts.seed = f.score.seed.value_or(1);
    opts.threads = f.score.threads;
    opts.coarse = f.coarse;
    opts.replicates = f.replicates;
    if (!f.quiet) opts.log = &err;
    const ExperimentResult res = run_experiment(f.experiment, opts);
    emit(f.out, res.table.csv(), out);
    for (const Check& c : res.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << res.name << ": " << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << '\n';
    }
    return res.pass() ? kExitOk : kExitRejected;
}

}  // namespace

Edge parse_edge(const std::string& text, const std::vector<std::string>& names) {
    const auto arrow = text.find("->");
    if (arrow == std::string::npos) throw InvalidArgument("edge '" + text + "' must look like j->i");
    return {parse_node(text.substr(0, arrow), names), parse_node(text.substr(arrow + 2), names)};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Causal additive trees: structure learning, substructure tests and simulations"};
    app.require_subcommand(1);
    Flags f;

    auto* learn_cmd = app.add_subcommand("learn", "learn a tree from data");
    add_score_flags(learn_cmd, f.score);
    learn_cmd->add_flag("--split", f.score.split, "fit on the first half, score on the second");
    learn_cmd->add_option("--out", f.out, "tree JSON (stdout when omitted)");
    learn_cmd->add_option("--weights-out", f.weights_out, "edge weight CSV");

    auto* test_cmd = app.add_subcommand("test", "test required/forbidden edges and a root");
    add_score_flags(test_cmd, f.score);
    test_cmd->add_option("--require", f.require, "required edge j->i (repeatable)");
    test_cmd->add_option("--forbid", f.forbid, "forbidden edge j->i (repeatable)");
    test_cmd->add_option("--root", f.root, "required root");
    test_cmd->add_option("--alpha", f.alpha, "family-wise level")->check(CLI::Range(1e-12, 1.0 - 1e-12));
    test_cmd->add_option("--out", f.out, "report JSON");

    auto* sim_cmd = app.add_subcommand("simulate", "draw data from a random additive noise tree");
    sim_cmd->add_option("--p", f.sim.p, "nodes")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--n", f.sim.n, "samples")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--tree-type", f.tree_type, "1 = many leaves, 2 = many branch nodes")->check(CLI::IsMember({1, 2}));
    sim_cmd->add_option("--alpha-noise", f.sim.alpha, "noise exponent")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--extra-edge-prob", f.sim.extra_edge_prob, "probability of each extra DAG edge")
        ->check(CLI::Range(0.0, 1.0));
    sim_cmd->add_option("--seed", f.sim.seed, "random seed")->required();
    sim_cmd->add_option("--out", f.out, "data CSV")->required();
    sim_cmd->add_option("--truth-out", f.truth_out, "truth graph JSON (default: next to the data)");

    auto* gap_cmd = app.add_subcommand("gap", "score gap between the best and second-best tree");
    add_score_flags(gap_cmd, f.score);
    gap_cmd->add_flag("--split", f.score.split, "fit on the first half, score on the second");
    gap_cmd->add_flag("--with-piw", f.piw, "also estimate the smallest neighbour conditional MI");
    gap_cmd->add_option("--out", f.out, "report JSON (stdout when omitted)");

    auto* metrics_cmd = app.add_subcommand("metrics", "SHD, SID and ancestor rates of an estimate");
    metrics_cmd->add_option("--truth", f.truth, "true graph JSON")->required();
    metrics_cmd->add_option("--estimate", f.estimate, "estimated graph JSON")->required();
    metrics_cmd->add_option("--out", f.out, "report JSON (stdout when omitted)");

    auto* repro_cmd = app.add_subcommand("reproduce", "run a named experiment");
    repro_cmd->add_option("experiment", f.experiment, "experiment name")->required();
    repro_cmd->add_flag("--grid-coarse", f.coarse, "smaller grids");
    repro_cmd->add_option("--replicates", f.replicates, "override the replicate count");
    repro_cmd->add_option("--seed", f.score.seed, "random seed");
    repro_cmd->add_option("--threads", f.score.threads, "worker threads");
    repro_cmd->add_option("--out", f.out, "results CSV (stdout when omitted)");
    repro_cmd->add_flag("--quiet", f.quiet, "no progress lines");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*learn_cmd) return cmd_learn(f, out);
        if (*test_cmd) return cmd_test(f, out);
        if (*sim_cmd) return cmd_simulate(f, out);
        if (*gap_cmd) return cmd_gap(f, out);
        if (*metrics_cmd) return cmd_metrics(f, out);
        if (*repro_cmd) return cmd_reproduce(f, out, err);
    } catch (const DegenerateDataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const CholeskyFailure& e) {
        err << "error: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace cat
