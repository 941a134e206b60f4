// Command-line front end: generate hyperbanana-family graphs, check Maxwell
// counting conditions, classify rigidity, list implied edges, and reproduce
// the odd/even nullity tables.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyperbanana/constructions.hpp"
#include "hyperbanana/exact_linalg.hpp"
#include "hyperbanana/graph.hpp"
#include "hyperbanana/graph_io.hpp"
#include "hyperbanana/maxwell.hpp"
#include "hyperbanana/report.hpp"
#include "hyperbanana/rigidity.hpp"

namespace {

using namespace hb;

constexpr int kExitOk = 0;
constexpr int kExitExpectationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

int enum_cap_from_env(int fallback) {
    const char* value = std::getenv("HYPERBANANA_ENUM_CAP");
    if (!value) return fallback;
    try {
        return std::stoi(value);
    } catch (const std::exception&) {
        std::cerr << "warning: ignoring invalid HYPERBANANA_ENUM_CAP='" << value << "'\n";
        return fallback;
    }
}

std::string range_text(const std::vector<int>& labels) {
    if (labels.empty()) return "-";
    return std::to_string(labels.front()) + ".." + std::to_string(labels.back());
}

struct GenArgs {
    std::string family;
    int d = 0;
    int b = 0;
    int k = 0;
    std::string out_path;
    bool fan_style = false;
};

int run_gen(const GenArgs& args) {
    Graph graph;
    std::optional<HyperbananaLabels> labels;
    if (args.family == "complete") {
        const int k = args.k > 0 ? args.k : args.d;
        graph = complete_graph(k);
    } else if (args.family == "banana") {
        graph = banana_bunch(args.d, args.b).graph;
    } else if (args.family == "hyperbanana") {
        auto built = hyperbanana(args.d, args.b);
        graph = std::move(built.graph);
        labels = std::move(built.labels);
        if (args.d != 2 * args.b - 1)
            std::cerr << "warning: the Maxwell/flexibility theorems cover odd hyperbananas with d = 2b-1;"
                      << " d=" << args.d << " b=" << args.b << " is outside that family\n";
    } else {  // even-hyperbanana
        auto built = even_hyperbanana(args.d, args.b,
                                      args.fan_style ? EvenEdgeStyle::fan : EvenEdgeStyle::matching);
        graph = std::move(built.graph);
        labels = std::move(built.labels);
        if (args.d != 2 * args.b)
            std::cerr << "warning: the Maxwell/conjecture statements cover even hyperbananas with d = 2b;"
                      << " d=" << args.d << " b=" << args.b << " is outside that family\n";
    }

    const GraphFile file{args.d, graph};
    save_graph_file(file, args.out_path);
    std::cout << "wrote " << args.family << " d=" << args.d;
    if (args.family == "complete")
        std::cout << " k=" << (args.k > 0 ? args.k : args.d);
    else
        std::cout << " b=" << args.b;
    std::cout << " to " << args.out_path << "\n";
    std::cout << "n=" << graph.vertex_count() << " m=" << graph.edge_count() << "\n";
    if (labels) {
        std::cout << "labels: v1=" << range_text(labels->v1) << " v2=" << range_text(labels->v2)
                  << " u=" << range_text(labels->u);
        if (!labels->e_plus.empty()) {
            std::cout << " e_plus=";
            for (std::size_t i = 0; i < labels->e_plus.size(); ++i) {
                if (i) std::cout << ",";
                std::cout << "(" << labels->e_plus[i].first << "," << labels->e_plus[i].second << ")";
            }
        }
        std::cout << "\n";
    }
    return kExitOk;
}

struct CheckArgs {
    std::string path;
    bool maxwell = false;
    bool classify_graph = false;
    bool implied = false;
    bool exact = false;
    bool json = false;
    bool force_condition2 = false;
    int trials = 3;
    std::uint64_t seed = 42;
    int parallelism = 0;
    std::string expect_maxwell;  // "", "pass", "fail"
    std::string expect_classification;
    std::optional<long> expect_rank;
    std::optional<long> expect_nullity;
    std::optional<long> expect_dof;
};

std::vector<std::string> run_expectations(const CheckArgs& args,
                                          const std::optional<MaxwellReport>& maxwell,
                                          const std::optional<RigidityVerdict>& verdict) {
    std::vector<std::string> failures;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    };
    if (!args.expect_maxwell.empty() && maxwell)
        expect(maxwell->pass == (args.expect_maxwell == "pass"),
               "maxwell: expected " + args.expect_maxwell + ", got " +
                   (maxwell->pass ? "pass" : "fail"));
    if (verdict) {
        if (!args.expect_classification.empty())
            expect(args.expect_classification == to_string(verdict->classification),
                   "classification: expected " + args.expect_classification + ", got " +
                       to_string(verdict->classification));
        if (args.expect_rank)
            expect(*args.expect_rank == verdict->rank,
                   "rank: expected " + std::to_string(*args.expect_rank) + ", got " +
                       std::to_string(verdict->rank));
        if (args.expect_nullity)
            expect(*args.expect_nullity == verdict->nullity,
                   "nullity: expected " + std::to_string(*args.expect_nullity) + ", got " +
                       std::to_string(verdict->nullity));
        if (args.expect_dof)
            expect(*args.expect_dof == verdict->dof,
                   "dof: expected " + std::to_string(*args.expect_dof) + ", got " +
                       std::to_string(verdict->dof));
    }
    return failures;
}

int run_check(CheckArgs args) {
    if (!args.maxwell && !args.classify_graph && !args.implied) {
        args.maxwell = true;
        args.classify_graph = true;
    }
    const GraphFile file = load_graph_file(args.path);
    const Graph& graph = file.graph;
    const int d = file.d;

    AnalysisReport report;
    report.d = d;
    report.n = graph.vertex_count();
    report.m = graph.edge_count();
    report.trials = args.trials;
    report.seed = args.seed;
    report.rank_mode = args.exact ? "both" : "modp";
    report.parallelism = args.parallelism;

    if (args.maxwell) {
        MaxwellOptions opt;
        opt.parallelism = args.parallelism;
        opt.subset_cap = enum_cap_from_env(opt.subset_cap);
        opt.force_condition2 = args.force_condition2;
        report.maxwell = check_maxwell(graph, d, opt);
    }
    if (args.classify_graph) {
        ClassifyOptions opt;
        opt.trials = args.trials;
        opt.seed = args.seed;
        opt.mode = args.exact ? RankMode::both : RankMode::modp;
        report.verdict = classify(graph, d, opt);
    }
    if (args.implied) {
        ImpliedOptions opt;
        opt.trials = args.trials;
        opt.seed = args.seed;
        report.implied = implied_edges(graph, d, std::nullopt, opt);
    }

    if (args.json) {
        std::cout << render_report(report);
    } else {
        std::cout << "graph: n=" << report.n << " m=" << report.m << " d=" << d << "\n";
        if (report.maxwell) {
            const MaxwellReport& mw = *report.maxwell;
            std::cout << "maxwell: " << (mw.pass ? "PASS" : "FAIL") << " (condition1: " << mw.condition1.actual
                      << (mw.condition1.pass ? " == " : " != ") << mw.condition1.expected << "; condition2: ";
            if (mw.condition2.ran) {
                std::cout << (mw.condition2.pass ? "pass" : "fail") << ", "
                          << mw.condition2.subsets_checked << " subsets";
                if (!mw.condition2.pass) {
                    std::cout << ", witness {";
                    for (std::size_t i = 0; i < mw.condition2.witness.size(); ++i) {
                        if (i) std::cout << ",";
                        std::cout << mw.condition2.witness[i];
                    }
                    std::cout << "} with " << mw.condition2.witness_edge_count << " edges";
                }
            } else {
                std::cout << "not run";
            }
            std::cout << ")\n";
        }
        if (report.verdict) {
            const RigidityVerdict& v = *report.verdict;
            std::cout << "classification: " << to_string(v.classification) << " (rank " << v.rank
                      << ", nullity " << v.nullity << ", dof " << v.dof << ") "
                      << (v.certified ? "[certified]" : "[probabilistic]") << "\n";
        }
        if (report.implied) {
            std::cout << "implied edges (" << report.implied->size() << "):";
            for (const auto& [u, v] : *report.implied) std::cout << " (" << u << "," << v << ")";
            std::cout << "\n";
        }
    }

    const auto failures = run_expectations(args, report.maxwell, report.verdict);
    for (const auto& f : failures) std::cerr << "EXPECT FAIL: " << f << "\n";
    return failures.empty() ? kExitOk : kExitExpectationFailed;
}

std::vector<Edge> parse_pair_list(const std::string& text) {
    // "10-11,10-12" -> {(10,11), (10,12)}
    std::vector<Edge> pairs;
    std::istringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ',')) {
        const auto dash = group.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("--pairs: expected 'u-v' but got '" + group + "'");
        pairs.emplace_back(std::stoi(group.substr(0, dash)), std::stoi(group.substr(dash + 1)));
    }
    return pairs;
}

struct ImpliedArgs {
    std::string path;
    std::string pairs;
    int trials = 3;
    std::uint64_t seed = 42;
    bool json = false;
};

int run_implied(const ImpliedArgs& args) {
    const GraphFile file = load_graph_file(args.path);
    std::optional<std::vector<Edge>> candidates;
    if (!args.pairs.empty()) candidates = parse_pair_list(args.pairs);
    ImpliedOptions opt;
    opt.trials = args.trials;
    opt.seed = args.seed;
    const std::vector<Edge> implied = implied_edges(file.graph, file.d, candidates, opt);
    if (args.json) {
        AnalysisReport report;
        report.d = file.d;
        report.n = file.graph.vertex_count();
        report.m = file.graph.edge_count();
        report.implied = implied;
        report.trials = args.trials;
        report.seed = args.seed;
        report.rank_mode = "modp";
        std::cout << render_report(report);
    } else {
        std::cout << "implied edges (" << implied.size() << "):";
        for (const auto& [u, v] : implied) std::cout << " (" << u << "," << v << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

struct TableArgs {
    std::string family;  // odd | even
    int b_min = 2;
    int b_max = 4;
    bool exact = false;
    int trials = 3;
    std::uint64_t seed = 42;
    int parallelism = 0;
};

int run_table(const TableArgs& args) {
    const bool odd = args.family == "odd";
    std::cout << "  b   d    n    m  maxwell  nullity  predicted  match  status\n";
    bool all_match = true;
    for (int b = args.b_min; b <= args.b_max; ++b) {
        const int d = odd ? 2 * b - 1 : 2 * b;
        const auto built = odd ? hyperbanana(d, b) : even_hyperbanana(d, b);
        const Graph& graph = built.graph;

        MaxwellOptions mw_opt;
        mw_opt.parallelism = args.parallelism;
        mw_opt.subset_cap = enum_cap_from_env(mw_opt.subset_cap);
        const MaxwellReport maxwell = check_maxwell(graph, d, mw_opt);

        ClassifyOptions cls_opt;
        cls_opt.trials = args.trials;
        cls_opt.seed = args.seed;
        cls_opt.mode = args.exact ? RankMode::both : RankMode::modp;
        const long predicted_nullity = trivial_motion_dim(d) + binomial2(b);
        if (odd) cls_opt.proven_rank = graph.edge_count() - binomial2(b);
        const RigidityVerdict verdict = classify(graph, d, cls_opt);

        bool ranks_agree = true;  // with --exact, every trial (modular and rational) must agree
        for (const auto& trial : verdict.trials) ranks_agree &= trial.rank == verdict.rank;

        const bool match = verdict.nullity == predicted_nullity && ranks_agree;
        all_match &= match && maxwell.pass;
        std::ostringstream row;
        row << std::setw(3) << b << std::setw(4) << d << std::setw(5) << graph.vertex_count()
            << std::setw(5) << graph.edge_count() << std::setw(9) << (maxwell.pass ? "pass" : "FAIL")
            << std::setw(9) << verdict.nullity << std::setw(11) << predicted_nullity << std::setw(7)
            << (match ? "yes" : "NO") << "  " << (odd ? (verdict.certified ? "certified" : "probabilistic")
                                                      : "CONJECTURE");
        if (!ranks_agree) row << "  (exact and modular ranks disagree)";
        std::cout << row.str() << "\n";
    }
    return all_match ? kExitOk : kExitExpectationFailed;
}

int run_selftest() {
    int failures = 0;
    auto step = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    step("complete graph edge count", complete_graph(5).edge_count() == 10);
    step("bipartite edge count", complete_bipartite(2, 3).edge_count() == 6);

    const auto [dbl, dbl_labels] = hyperbanana(3, 2);
    step("double banana counts", dbl.vertex_count() == 8 && dbl.edge_count() == 18);
    step("double banana is Maxwell", check_maxwell(dbl, 3).pass);
    const RigidityVerdict dbl_verdict = classify(dbl, 3);
    step("double banana flexible-dependent with one dof",
         dbl_verdict.classification == Classification::flexible_dependent && dbl_verdict.dof == 1);
    const auto hinge = implied_edges(dbl, 3);
    step("double banana implied hinge",
         hinge.size() == 1 && hinge[0] == Edge{dbl_labels.u[0], dbl_labels.u[1]});

    step("banana bunch minimally rigid",
         classify(banana_bunch(3, 2).graph, 3).classification == Classification::minimally_rigid);

    const auto [h43, h43_labels] = hyperbanana(4, 3);
    const RigidityVerdict h43_verdict = classify(h43, 4);
    step("H_{4,3} overcounted yet flexible about the banana plane",
         !check_condition1(h43, 4).pass &&
             h43_verdict.classification == Classification::flexible_dependent &&
             h43_verdict.rank == 33 && h43_verdict.dof == 1);

    std::mt19937_64 rng(42);
    IntMatrix random(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            random(i, j) = static_cast<long>(uniform_below(rng, 2001)) - 1000;
    step("mod-p rank agrees with exact rank", rank_mod_p(random, random_prime(rng)) == rank_exact(random));

    const GraphFile file{3, dbl};
    std::istringstream round_trip(serialize_graph_file(file));
    step("graph file round trip", parse_graph_file(round_trip) == file);

    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return failures == 0 ? kExitOk : kExitExpectationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbanana: combinatorial rigidity toolkit for banana bunches and hyperbananas"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a graph family and write a graph file");
    gen->add_option("--family", gen_args.family, "banana | hyperbanana | even-hyperbanana | complete")
        ->required()
        ->check(CLI::IsMember({"banana", "hyperbanana", "even-hyperbanana", "complete"}));
    gen->add_option("-d,--dimension", gen_args.d, "ambient dimension d")->required()->check(CLI::PositiveNumber);
    gen->add_option("-b,--bananas", gen_args.b, "banana vertex count b");
    gen->add_option("-k,--complete-size", gen_args.k, "vertex count for --family complete (default d)");
    gen->add_option("-o,--out", gen_args.out_path, "output graph file")->required();
    gen->add_flag("--fan-eplus", gen_args.fan_style,
                  "route the even-hyperbanana extra edges through one shared endpoint instead of a matching");

    CheckArgs check_args;
    CLI::App* chk = app.add_subcommand("check", "analyze a graph file");
    chk->add_option("file", check_args.path, "graph file (header 'd n m')")->required();
    chk->add_flag("--maxwell", check_args.maxwell, "run the Maxwell counting checks");
    chk->add_flag("--classify", check_args.classify_graph, "classify rigid/flexible via generic rank");
    chk->add_flag("--implied", check_args.implied, "list implied edges over all non-edges");
    chk->add_flag("--exact", check_args.exact, "confirm the modular rank with exact rational elimination");
    chk->add_flag("--json", check_args.json, "emit a JSON report instead of text");
    chk->add_flag("--force-condition2", check_args.force_condition2,
                  "run the subset enumeration even when condition 1 fails");
    chk->add_option("--trials", check_args.trials, "independent (embedding, prime) trials")->check(CLI::PositiveNumber);
    chk->add_option("--seed", check_args.seed, "master seed for embeddings and primes");
    chk->add_option("--parallelism", check_args.parallelism, "worker cap for subset enumeration");
    chk->add_option("--expect-maxwell", check_args.expect_maxwell, "pass|fail")
        ->check(CLI::IsMember({"pass", "fail"}));
    chk->add_option("--expect-classification", check_args.expect_classification,
                    "minimally-rigid | rigid-overconstrained | flexible-independent | flexible-dependent");
    long expect_rank = 0, expect_nullity = 0, expect_dof = 0;
    CLI::Option* rank_opt = chk->add_option("--expect-rank", expect_rank, "expected generic rank");
    CLI::Option* nullity_opt = chk->add_option("--expect-nullity", expect_nullity, "expected nullity");
    CLI::Option* dof_opt = chk->add_option("--expect-dof", expect_dof, "expected degrees of freedom");

    ImpliedArgs implied_args;
    CLI::App* imp = app.add_subcommand("implied", "list implied edges of a graph file");
    imp->add_option("file", implied_args.path, "graph file")->required();
    imp->add_option("--pairs", implied_args.pairs, "candidate pairs, e.g. '10-11,10-12' (default: all non-edges)");
    imp->add_option("--trials", implied_args.trials, "trial count")->check(CLI::PositiveNumber);
    imp->add_option("--seed", implied_args.seed, "master seed");
    imp->add_flag("--json", implied_args.json, "emit a JSON report");

    TableArgs table_args;
    CLI::App* tbl = app.add_subcommand("table", "nullity table for the odd (proved) or even (conjectured) family");
    tbl->add_option("--family", table_args.family, "odd | even")
        ->required()
        ->check(CLI::IsMember({"odd", "even"}));
    tbl->add_option("--b-min", table_args.b_min, "first b")->check(CLI::PositiveNumber);
    tbl->add_option("--b-max", table_args.b_max, "last b")->check(CLI::PositiveNumber);
    tbl->add_flag("--exact", table_args.exact, "confirm modular ranks with exact elimination");
    tbl->add_option("--trials", table_args.trials, "trial count")->check(CLI::PositiveNumber);
    tbl->add_option("--seed", table_args.seed, "master seed");
    tbl->add_option("--parallelism", table_args.parallelism, "worker cap for subset enumeration");

    CLI::App* self = app.add_subcommand("selftest", "quick built-in battery of known results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            if (gen_args.family != "complete" && gen_args.b < 1)
                throw std::invalid_argument("gen: --bananas is required for banana families");
            return run_gen(gen_args);
        }
        if (chk->parsed()) {
            if (*rank_opt) check_args.expect_rank = expect_rank;
            if (*nullity_opt) check_args.expect_nullity = expect_nullity;
            if (*dof_opt) check_args.expect_dof = expect_dof;
            if ((check_args.expect_rank || check_args.expect_nullity || check_args.expect_dof ||
                 !check_args.expect_classification.empty()) &&
                !check_args.classify_graph)
                check_args.classify_graph = true;
            if (!check_args.expect_maxwell.empty()) check_args.maxwell = true;
            return run_check(check_args);
        }
        if (imp->parsed()) return run_implied(implied_args);
        if (tbl->parsed()) return run_table(table_args);
        if (self->parsed()) return run_selftest();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
