// rigidbar: generic rigidity of linearly constrained frameworks.
//
// Exit codes: 0 success / routes agree, 1 input error, 2 the algebraic and
// combinatorial routes disagree, 3 combinatorial test inapplicable.

#include <chrono>
#include <cmath>
#include <functional>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "report.hpp"
#include "rigidbar/characterisation.hpp"
#include "rigidbar/error.hpp"
#include "rigidbar/generators.hpp"
#include "rigidbar/graph_io.hpp"
#include "rigidbar/rigidity.hpp"
#include "rigidbar/sparsity.hpp"

namespace rigidbar::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDisagree = 2;
constexpr int kExitInapplicable = 3;

struct Common {
    std::optional<std::uint64_t> seed;
    std::size_t trials = 3;
    bool verbose = false;

    std::uint64_t resolved_seed() const {
        if (seed) return *seed;
        if (const char* env = std::getenv("RIGIDBAR_SEED")) {
            try {
                return std::stoull(env);
            } catch (const std::exception&) {
                throw InputError(std::string("RIGIDBAR_SEED is not an unsigned integer: ") + env);
            }
        }
        return 0;
    }

    TrialOptions options() const { return {trials, verbose}; }
};

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json header(const char* command, const LoopedGraph& g, std::uint64_t seed) {
    return Json{{"command", command}, {"input_digest", input_digest(g)}, {"seed", seed}};
}

void emit(Json report, const Stopwatch& clock) {
    report["wall_time_ms"] = clock.elapsed_ms();
    std::cout << report.dump() << '\n';
}

int run_check(const std::string& path, std::size_t d, const std::string& mode, const Common& common) {
    const Stopwatch clock;
    const auto g = load_graph(path);
    if (d == 0) throw InputError("d must be at least 1");
    if (mode == "combinatorial" && d < 2) throw InputError("combinatorial mode needs d >= 2");
    const auto seed = common.resolved_seed();

    Json report = header("check", g, seed);
    report["d"] = d;
    report["mode"] = mode;
    report["trials"] = common.trials;

    std::optional<bool> alg_independent, alg_rigid;
    double bound = 0.0;
    if (mode != "combinatorial") {
        RandomSource rs(seed);
        const GenericRankOracle oracle(g, d, rs, common.options());
        const auto rank = oracle.report();
        bound = rank.failure_bound;
        alg_independent = rank.rank == g.element_count();
        alg_rigid = rank.rank == d * g.vertex_count();
        // A full-rank answer is certain; only "dependent"/"flexible" can be wrong.
        report["algebraic"] = Json{{"rank", to_json(rank)},
                                   {"independent", randomized(*alg_independent, *alg_independent ? 0.0 : bound)},
                                   {"rigid", randomized(*alg_rigid, *alg_rigid ? 0.0 : bound)}};
    }
    report["error_bound"] = bound;

    int exit_code = kExitOk;
    if (mode != "algebraic") {
        if (d < 2) {
            report["combinatorial"] = Json{{"applicable", false}, {"reason", "d < 2"}};
        } else {
            const auto independent = combinatorial_independent(g, d);
            if (!independent.hypothesis_ok) {
                report["combinatorial"] =
                    Json{{"applicable", false},
                         {"reason", "some vertex has fewer than " + std::to_string(required_loop_degree(d)) +
                                        " loops"}};
                if (mode == "combinatorial") exit_code = kExitInapplicable;
            } else {
                const auto rigid = combinatorial_rigid(g, d);
                report["combinatorial"] = Json{{"applicable", true},
                                               {"independent", independent.verdict},
                                               {"independence_witness", to_json(g, independent.witness)},
                                               {"rigid", rigid.verdict},
                                               {"rigidity_witness", to_json(g, rigid.witness)}};
                if (alg_independent) {
                    const bool agree = *alg_independent == independent.verdict && *alg_rigid == rigid.verdict;
                    report["agree"] = agree;
                    if (!agree) exit_code = kExitDisagree;
                }
            }
        }
    }
    emit(std::move(report), clock);
    return exit_code;
}

int run_sparsity(const std::string& path, std::size_t k) {
    const Stopwatch clock;
    const auto g = load_graph(path);
    if (k == 0) throw InputError("k must be at least 1");
    const auto verdict = pebble_game(g, {k});
    const auto tight = has_tight_spanning_subgraph(g, {k});

    Json report{{"command", "sparsity"}, {"input_digest", input_digest(g)}, {"k", k}};
    report["sparse"] = verdict.is_sparse;
    report["tight"] = verdict.is_sparse && g.element_count() == k * g.vertex_count();
    report["matroid_rank"] = *verdict.matroid_rank;
    report["violation"] = verdict.violation ? Json(*verdict.violation) : Json(nullptr);
    report["tight_spanning_subgraph"] = tight ? to_json(*tight) : Json(nullptr);
    emit(std::move(report), clock);
    return kExitOk;
}

int run_motions(const std::string& path, std::size_t d, const Common& common) {
    const Stopwatch clock;
    const auto g = load_graph(path);
    if (d == 0) throw InputError("d must be at least 1");
    const auto seed = common.resolved_seed();
    RandomSource rs(seed);
    const auto generic = generic_rank(g, d, rs, common.options());
    const auto realisation = random_integer_realisation(g, d, rs);
    const auto motions = motion_space(g, realisation);

    auto vectors = [](const std::vector<std::vector<Rational>>& rows) {
        Json out = Json::array();
        for (const auto& row : rows) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(x.str());
            out.push_back(std::move(r));
        }
        return out;
    };
    Json basis = Json::array();
    for (const auto& m : motions) basis.push_back(vectors(m.velocity));

    const std::size_t point_rank = d * g.vertex_count() - motions.size();
    Json report = header("motions", g, seed);
    report["d"] = d;
    report["trials"] = common.trials;
    report["generic_rank"] = to_json(generic);
    report["error_bound"] = generic.failure_bound;
    report["realisation"] = Json{{"points", vectors(realisation.points)}, {"normals", vectors(realisation.normals)}};
    report["rank_at_point"] = point_rank;
    report["point_attains_generic_rank"] = point_rank == generic.rank;
    report["motion_dimension"] = motions.size();
    report["infinitesimally_rigid"] = motions.empty();
    report["basis"] = std::move(basis);
    emit(std::move(report), clock);
    return kExitOk;
}

int run_circuit(const std::string& path, std::size_t d, const Common& common) {
    const Stopwatch clock;
    const auto g = load_graph(path);
    if (d == 0) throw InputError("d must be at least 1");
    const auto seed = common.resolved_seed();
    RandomSource rs(seed);
    const GenericRankOracle oracle(g, d, rs, common.options());
    const auto rank = oracle.report();
    const auto circuit = find_circuit(oracle);

    Json report = header("circuit", g, seed);
    report["d"] = d;
    report["trials"] = common.trials;
    report["rank"] = to_json(rank);
    report["error_bound"] = rank.failure_bound;
    report["independent"] = randomized(!circuit, circuit ? 0.0 : rank.failure_bound);
    if (circuit) {
        Json elements = Json::array();
        for (ElementId e : circuit->elements) elements.push_back(to_json(g, e));
        report["circuit"] = std::move(elements);
        report["pivot"] = to_json(g, circuit->pivot);
        report["verified_minimal"] = verify_circuit(oracle, *circuit);
    } else {
        report["circuit"] = nullptr;
    }
    emit(std::move(report), clock);
    return kExitOk;
}

struct SweepArgs {
    std::size_t t = 1;
    std::size_t d = 2;
    std::size_t count = 100;
    std::size_t max_vertices = 8;
    bool allow_open_range = false;
};

LoopedGraph sweep_instance(RandomSource& rs, const SweepArgs& args) {
    const auto n = 1 + rs.below(args.max_vertices);
    const auto edge_ppm = 150'000 + rs.below(700'001);
    return random_looped_graph(rs, n, edge_ppm, 0, args.t);
}

int run_sweep(const SweepArgs& args, const Common& common) {
    const Stopwatch clock;
    if (args.t == 0) throw InputError("t must be at least 1");
    if (args.d < 2) throw InputError("d must be at least 2");
    if (args.max_vertices == 0) throw InputError("max-vertices must be at least 1");
    if (args.d + 1 < 2 * args.t && !args.allow_open_range) {
        throw InputError("d < 2t - 1 is outside the proved range; pass --allow-open-range to explore it");
    }
    const auto seed = common.resolved_seed();
    const RandomSource root(seed);

    std::size_t agreements = 0;
    for (std::size_t i = 0; i < args.count; ++i) {
        const Stopwatch instance_clock;
        RandomSource rs = root.fork(i);
        const auto g = sweep_instance(rs, args);
        const auto check =
            conjecture_instance_check(g, args.t, args.d, rs, common.options(), args.allow_open_range);
        agreements += check.agree ? 1 : 0;

        Json line{{"command", "sweep"},
                  {"index", i},
                  {"input_digest", input_digest(g)},
                  {"seed", seed},
                  {"t", args.t},
                  {"d", args.d},
                  {"graph", to_json(g)},
                  {"algebraic", randomized(check.algebraic, check.algebraic ? 0.0 : check.rank.failure_bound)},
                  {"combinatorial", check.combinatorial},
                  {"tight_spanning_subgraph", check.tight_spanning},
                  {"agree", check.agree},
                  {"in_proved_range", check.in_proved_range},
                  {"rank", to_json(check.rank)},
                  {"trials", common.trials},
                  {"error_bound", check.rank.failure_bound},
                  {"wall_time_ms", instance_clock.elapsed_ms()}};
        std::cout << line.dump() << '\n';
    }
    Json summary{{"command", "sweep"},
                 {"summary", true},
                 {"seed", seed},
                 {"t", args.t},
                 {"d", args.d},
                 {"count", args.count},
                 {"agreements", agreements},
                 {"agreement_rate", args.count == 0 ? 1.0 : static_cast<double>(agreements) / args.count},
                 {"in_proved_range", args.d + 1 >= 2 * args.t}};
    emit(std::move(summary), clock);
    return agreements == args.count ? kExitOk : kExitDisagree;
}

struct GenArgs {
    std::string kind = "random";
    std::size_t vertices = 0;
    std::size_t loops_per_vertex = 0;
    std::size_t d = 2;
    double edge_prob = 0.5;
    std::string output;
};

int run_gen(const GenArgs& args, const Common& common) {
    if (args.vertices == 0) throw InputError("--vertices must be at least 1");
    if (args.d == 0) throw InputError("--d must be at least 1");
    if (args.edge_prob < 0.0 || args.edge_prob > 1.0) throw InputError("--edge-prob must lie in [0, 1]");
    RandomSource rs(common.resolved_seed());
    LoopedGraph g;
    if (args.kind == "random") {
        const auto ppm = static_cast<std::uint64_t>(std::llround(args.edge_prob * static_cast<double>(kPpm)));
        g = random_looped_graph(rs, args.vertices, ppm, 0, 0);
    } else if (args.kind == "zero-ext-chain") {
        g = zero_extension_chain(rs, args.vertices, args.d);
    } else {
        g = one_extension_chain(rs, args.vertices, args.d);
    }
    g = add_uniform_loops(g, args.loops_per_vertex);
    if (args.output.empty() || args.output == "-") {
        std::cout << dump_graph(g) << '\n';
    } else {
        save_graph(g, args.output);
    }
    return kExitOk;
}

void add_common(CLI::App& sub, Common& common) {
    sub.add_option("--seed", common.seed, "Random seed (default: $RIGIDBAR_SEED, else 0)");
    sub.add_option("--trials", common.trials, "Independent random evaluations per rank")->check(CLI::PositiveNumber);
    sub.add_flag("-v,--verbose", common.verbose, "Print rank, trials and error bound to stderr");
}

}  // namespace
}  // namespace rigidbar::cli

int main(int argc, char** argv) {
    using namespace rigidbar::cli;

    CLI::App app{"Generic rigidity of linearly constrained bar-joint frameworks"};
    app.require_subcommand(1);

    Common common;
    std::string graph_path;
    std::size_t d = 2;
    std::size_t k = 1;
    std::string mode = "both";
    SweepArgs sweep;
    GenArgs gen;
    std::function<int()> action;

    auto* check = app.add_subcommand("check", "Decide independence and rigidity of a graph");
    check->add_option("graph", graph_path, "Graph JSON file")->required();
    check->add_option("-d,--d", d, "Dimension")->required();
    check->add_option("--mode", mode, "algebraic | combinatorial | both")
        ->check(CLI::IsMember({"algebraic", "combinatorial", "both"}));
    add_common(*check, common);
    check->callback([&] { action = [&] { return run_check(graph_path, d, mode, common); }; });

    auto* sparsity = app.add_subcommand("sparsity", "Pebble-game k-sparsity verdict");
    sparsity->add_option("graph", graph_path, "Graph JSON file")->required();
    sparsity->add_option("-k,--k", k, "Sparsity parameter")->required();
    sparsity->callback([&] { action = [&] { return run_sparsity(graph_path, k); }; });

    auto* motions = app.add_subcommand("motions", "Infinitesimal motion space at a random integer realisation");
    motions->add_option("graph", graph_path, "Graph JSON file")->required();
    motions->add_option("-d,--d", d, "Dimension")->required();
    add_common(*motions, common);
    motions->callback([&] { action = [&] { return run_motions(graph_path, d, common); }; });

    auto* circuit = app.add_subcommand("circuit", "Find a circuit of the generic rigidity matroid");
    circuit->add_option("graph", graph_path, "Graph JSON file")->required();
    circuit->add_option("-d,--d", d, "Dimension")->required();
    add_common(*circuit, common);
    circuit->callback([&] { action = [&] { return run_circuit(graph_path, d, common); }; });

    auto* sweep_cmd = app.add_subcommand("sweep", "Cross-check the t-tight spanning subgraph characterisation");
    sweep_cmd->add_option("--t", sweep.t, "Loop deficit t")->required();
    sweep_cmd->add_option("--d", sweep.d, "Dimension")->required();
    sweep_cmd->add_option("--count", sweep.count, "Number of random instances");
    sweep_cmd->add_option("--max-vertices", sweep.max_vertices, "Largest instance size");
    sweep_cmd->add_flag("--allow-open-range", sweep.allow_open_range, "Permit d < 2t - 1");
    add_common(*sweep_cmd, common);
    sweep_cmd->callback([&] { action = [&] { return run_sweep(sweep, common); }; });

    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph JSON file");
    gen_cmd->add_option("--kind", gen.kind, "random | zero-ext-chain | one-ext-chain")
        ->check(CLI::IsMember({"random", "zero-ext-chain", "one-ext-chain"}));
    gen_cmd->add_option("--vertices", gen.vertices, "Number of vertices")->required();
    gen_cmd->add_option("--loops-per-vertex", gen.loops_per_vertex, "Loops added at every vertex");
    gen_cmd->add_option("--d", gen.d, "Dimension for extension chains");
    gen_cmd->add_option("--edge-prob", gen.edge_prob, "Edge probability for --kind random");
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");
    gen_cmd->add_option("--seed", common.seed, "Random seed (default: $RIGIDBAR_SEED, else 0)");
    gen_cmd->callback([&] { action = [&] { return run_gen(gen, common); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}}.dump() << '\n';
        return kExitInput;
    }
}
