#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "gmod/anonymity.hpp"
#include "gmod/bench.hpp"
#include "gmod/cluster_editing.hpp"
#include "gmod/connectivity.hpp"
#include "gmod/errors.hpp"
#include "gmod/hcd.hpp"
#include "gmod/io.hpp"
#include "gmod/list_coloring.hpp"
#include "gmod/oracles.hpp"
#include "gmod/tournament.hpp"
#include "gmod/tuner.hpp"
#include "gmod/vertex_cover.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceCap = 3;

struct CommonArgs {
    std::string input;
    std::string format = "auto";
    int k = -1;
    int ell = 2;
    int c = 0;
    std::string policy = "lexicographic";
    std::string config;
    std::uint64_t seed = 0;
    long long timeout_ms = 0;
};

gmod::LabeledGraph load(const CommonArgs& args) {
    gmod::InstanceFormat fmt = args.format == "auto" ? gmod::guess_format(args.input)
                                                     : gmod::parse_format(args.format);
    return gmod::load_graph(args.input, fmt);
}

gmod::TieBreak tie_break(const CommonArgs& args) {
    gmod::TieBreak tb;
    tb.seed = args.seed;
    if (args.policy == "lexicographic")
        tb.kind = gmod::TieBreak::Kind::lexicographic;
    else if (args.policy == "adversarial")
        tb.kind = gmod::TieBreak::Kind::adversarial;
    else if (args.policy == "random")
        tb.kind = gmod::TieBreak::Kind::random;
    else
        throw std::invalid_argument("unknown policy: " + args.policy);
    return tb;
}

// "lower_bound=p3_packing,reduction=critical_clique,period=2,order=min_id"
std::map<std::string, std::string> parse_config_string(const std::string& config) {
    std::map<std::string, std::string> out;
    std::size_t pos = 0;
    while (pos < config.size()) {
        std::size_t end = config.find(',', pos);
        if (end == std::string::npos)
            end = config.size();
        std::string item = config.substr(pos, end - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config items must look like key=value: " + item);
        out[item.substr(0, eq)] = item.substr(eq + 1);
        pos = end + 1;
    }
    return out;
}

void print_labels(const char* name, const std::vector<int>& vs,
                  const std::vector<long long>& labels) {
    std::cout << name << ":";
    for (int v : vs)
        std::cout << ' ' << labels[v];
    std::cout << '\n';
}

void print_edges(const char* name, const gmod::EdgeSet& es,
                 const std::vector<long long>& labels) {
    std::cout << name << ":";
    for (const gmod::Edge& e : es)
        std::cout << ' ' << labels[e.u] << '-' << labels[e.v];
    std::cout << '\n';
}

int cmd_hs(const CommonArgs& args) {
    auto lg = load(args);
    auto sol = gmod::hs_cluster(lg.graph, tie_break(args));
    std::cout << "cost: " << sol.cost << '\n';
    print_edges("deleted", sol.deleted, lg.labels);
    for (const auto& cluster : sol.clusters.clusters)
        print_labels("cluster", cluster, lg.labels);
    return kExitOk;
}

int cmd_hcd(const CommonArgs& args, int max_component) {
    auto lg = load(args);
    int k = args.k >= 0 ? args.k : lg.graph.num_edges();
    gmod::HcdExactOptions opts;
    opts.max_component = max_component;
    auto sol = gmod::hcd_exact(lg.graph, k, opts);
    if (!sol) {
        std::cout << "infeasible within k=" << k << '\n';
        return kExitInfeasible;
    }
    std::cout << "cost: " << sol->cost << '\n';
    print_edges("deleted", sol->deleted, lg.labels);
    for (const auto& cluster : sol->clusters.clusters)
        print_labels("cluster", cluster, lg.labels);
    return kExitOk;
}

int cmd_anon(const CommonArgs& args, bool exact) {
    auto lg = load(args);
    if (exact) {
        int k = args.k >= 0 ? args.k : lg.graph.num_vertices();
        auto edits = gmod::anon_exact(lg.graph, args.ell, k);
        if (!edits) {
            std::cout << "infeasible within k=" << k << '\n';
            return kExitInfeasible;
        }
        std::cout << "cost: " << edits->size() << '\n';
        print_edges("inserted", edits->insertions, lg.labels);
        return kExitOk;
    }
    auto edits = gmod::lt_heuristic(lg.graph, args.ell);
    long long lb = gmod::anon_insertion_lower_bound(lg.graph, args.ell);
    int delta = gmod::DegreeSequence::of(lg.graph).delta_max();
    std::cout << "cost: " << edits.size() << '\n';
    print_edges("inserted", edits.insertions, lg.labels);
    std::cout << "lower_bound: " << lb << '\n';
    std::cout << "certified_optimal: " << (gmod::win_win_certificate(delta, lb) ? "yes" : "no")
              << '\n';
    return kExitOk;
}

int cmd_vc_lp(const CommonArgs& args) {
    auto lg = load(args);
    auto lp = gmod::lp_half_integral(lg.graph);
    std::cout << "lp: " << gmod::rational_string(lp.lp_twice) << '\n';
    auto red = gmod::nt_reduce(lg.graph, lp);
    print_labels("forced_in", red.forced_in, lg.labels);
    print_labels("forced_out", red.forced_out, lg.labels);
    int k = args.k >= 0 ? args.k : lg.graph.num_vertices();
    auto cover = gmod::vc_above_lp(lg.graph, k);
    if (!cover) {
        std::cout << "infeasible within k=" << k << '\n';
        return kExitInfeasible;
    }
    std::cout << "cover_size: " << cover->size() << '\n';
    print_labels("cover", *cover, lg.labels);
    return kExitOk;
}

int cmd_vc_ls(const CommonArgs& args, const std::string& cover_arg) {
    auto lg = load(args);
    std::vector<int> cover;
    if (cover_arg.empty()) {
        for (int v = 0; v < lg.graph.num_vertices(); ++v)
            cover.push_back(v);
    } else {
        std::map<long long, int> index;
        for (int i = 0; i < static_cast<int>(lg.labels.size()); ++i)
            index[lg.labels[i]] = i;
        std::size_t pos = 0;
        while (pos < cover_arg.size()) {
            std::size_t end = cover_arg.find(',', pos);
            if (end == std::string::npos)
                end = cover_arg.size();
            long long label = std::stoll(cover_arg.substr(pos, end - pos));
            auto it = index.find(label);
            if (it == index.end())
                throw std::invalid_argument("cover vertex " + std::to_string(label) +
                                            " is not in the graph");
            cover.push_back(it->second);
            pos = end + 1;
        }
    }
    int k = args.k >= 0 ? args.k : 3;
    auto better = gmod::ls_vertex_cover(lg.graph, cover, k);
    if (!better) {
        std::cout << "none: no smaller cover within distance " << k << '\n';
        return kExitInfeasible;
    }
    std::cout << "cover_size: " << better->size() << '\n';
    print_labels("cover", *better, lg.labels);
    return kExitOk;
}

int cmd_fast_ls(const CommonArgs& args) {
    auto t = gmod::load_tournament(args.input);
    int k = args.k >= 0 ? args.k : 3;
    gmod::ArcSet sol;
    for (const gmod::Arc& a : t.arcs())
        if (a.from > a.to)
            sol.insert(a);
    int rounds = 0;
    while (auto better = gmod::ls_fast(t, sol, k)) {
        sol = *better;
        ++rounds;
    }
    std::cout << "cost: " << sol.size() << " (after " << rounds << " improvement rounds)\n";
    std::cout << "deleted:";
    for (const gmod::Arc& a : sol)
        std::cout << ' ' << a.from + 1 << "->" << a.to + 1;
    std::cout << '\n';
    return kExitOk;
}

int cmd_ilc(const CommonArgs& args, bool global_budget) {
    auto f = gmod::load_listcoloring(args.input);
    auto run = gmod::ilc_color_graph(f.graph, f.lists, args.c, global_budget);
    auto greedy = gmod::greedy_color(f.graph, f.lists);
    if (greedy)
        std::cout << "greedy_colors: " << gmod::color_count(*greedy) << '\n';
    else
        std::cout << "greedy_colors: none\n";
    std::cout << "nodes: " << run.nodes << " (bound " << run.node_bound << ")\n";
    if (!run.coloring) {
        std::cout << "none: no list coloring found with budget " << args.c << '\n';
        return kExitInfeasible;
    }
    std::cout << "colors: " << gmod::color_count(*run.coloring) << '\n';
    std::cout << "coloring:";
    for (int v = 0; v < f.graph.num_vertices(); ++v)
        std::cout << ' ' << v + 1 << "=" << (*run.coloring)[v];
    std::cout << '\n';
    return kExitOk;
}

int cmd_ce(const CommonArgs& args) {
    auto lg = load(args);
    auto params = parse_config_string(args.config);
    gmod::CeConfig cfg;
    if (auto it = params.find("lower_bound"); it != params.end())
        cfg.lower_bound =
            it->second == "none" ? gmod::CeLowerBound::none : gmod::CeLowerBound::p3_packing;
    if (auto it = params.find("reduction"); it != params.end())
        cfg.reduction = it->second == "none" ? gmod::CeReduction::none
                                             : gmod::CeReduction::critical_clique;
    if (auto it = params.find("period"); it != params.end())
        cfg.reduction_period = std::stoi(it->second);
    if (auto it = params.find("order"); it != params.end())
        cfg.branch_order = it->second == "max_conflict" ? gmod::CeBranchOrder::max_conflict
                                                        : gmod::CeBranchOrder::min_id;
    cfg.seed = args.seed;
    int n = lg.graph.num_vertices();
    int k = args.k >= 0 ? args.k : n * (n - 1) / 2;
    gmod::CeSolveStats stats;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (args.timeout_ms > 0)
        deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(args.timeout_ms);
    auto edits = gmod::ce_solve(lg.graph, k, cfg, &stats, deadline);
    std::cout << "nodes: " << stats.nodes << '\n';
    if (stats.timed_out) {
        std::cout << "timeout after " << args.timeout_ms << " ms\n";
        return kExitResourceCap;
    }
    if (!edits) {
        std::cout << "infeasible within k=" << k << '\n';
        return kExitInfeasible;
    }
    std::cout << "cost: " << edits->size() << '\n';
    print_edges("deleted", edits->deletions, lg.labels);
    print_edges("inserted", edits->insertions, lg.labels);
    return kExitOk;
}

int cmd_tune(const std::string& corpus_dir, long long budget_ms, std::uint64_t seed,
             const std::string& output) {
    namespace fs = std::filesystem;
    std::vector<gmod::TuneInstance> corpus;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const fs::path& path : files) {
        gmod::InstanceFormat fmt = gmod::guess_format(path.string());
        if (fmt != gmod::InstanceFormat::edge_list && fmt != gmod::InstanceFormat::dimacs)
            continue;
        corpus.push_back({path.filename().string(),
                          gmod::load_graph(path.string(), fmt).graph});
    }
    auto report = gmod::tune(corpus, gmod::ConfigGrid::full(),
                             std::chrono::milliseconds(budget_ms), seed);
    std::string json = report.to_json();
    if (output.empty()) {
        std::cout << json;
    } else {
        std::ofstream out(output);
        out << json;
        std::cout << "report written to " << output << '\n';
    }
    double total_ms = 0;
    for (const auto& run : report.runs)
        total_ms += run.wall_ms;
    std::cerr << "total solver time: " << total_ms << " ms over " << report.runs.size()
              << " runs\n";
    return kExitOk;
}

int cmd_oracle(const std::string& problem, const CommonArgs& args) {
    if (problem == "hcd") {
        auto lg = load(args);
        std::cout << "opt: " << gmod::brute::hcd_opt(lg.graph) << '\n';
    } else if (problem == "vc") {
        auto lg = load(args);
        std::cout << "opt: " << gmod::brute::vc_opt(lg.graph) << '\n';
    } else if (problem == "lp") {
        auto lg = load(args);
        std::cout << "opt: " << gmod::rational_string(gmod::brute::lp_opt_twice(lg.graph)) << '\n';
    } else if (problem == "anon") {
        auto lg = load(args);
        int k = args.k >= 0 ? args.k : lg.graph.num_vertices();
        auto edits = gmod::anon_exact(lg.graph, args.ell, k);
        if (!edits) {
            std::cout << "infeasible within k=" << k << '\n';
            return kExitInfeasible;
        }
        std::cout << "opt: " << edits->size() << '\n';
    } else if (problem == "fas") {
        auto t = gmod::load_tournament(args.input);
        std::cout << "opt: " << gmod::brute::fas_opt(t) << '\n';
    } else if (problem == "ce") {
        auto lg = load(args);
        std::cout << "opt: " << gmod::brute::ce_opt(lg.graph) << '\n';
    } else {
        throw std::invalid_argument("unknown oracle problem: " + problem);
    }
    return kExitOk;
}

int cmd_fixtures() {
    bool all_valid = true;
    for (const auto& rec : gmod::run_builtin_fixtures()) {
        std::cout << gmod::to_json(rec) << '\n';
        all_valid = all_valid && rec.valid;
    }
    return all_valid ? kExitOk : kExitInfeasible;
}

int cmd_bench(const std::string& corpus, gmod::BenchOptions options) {
    auto records = gmod::bench_directory(corpus, options);
    for (const auto& rec : records)
        std::cout << gmod::to_json(rec) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gmod - graph modification solver toolkit"};
    app.require_subcommand(1);

    CommonArgs args;
    int max_component = 20;
    bool exact = false, global_budget = false;
    std::string cover_arg, corpus, output, oracle_problem, bench_problem, bench_solver;
    long long budget_ms = 1000;

    auto add_common = [&](CLI::App* sub, bool needs_input = true) {
        if (needs_input)
            sub->add_option("--input,-i", args.input, "instance file")->required();
        sub->add_option("--format", args.format,
                        "edge_list | dimacs | tournament | listcoloring (default: by extension)");
        sub->add_option("--k", args.k, "budget / exchange distance");
        sub->add_option("--ell", args.ell, "anonymity level");
        sub->add_option("--c", args.c, "recoloring budget");
        sub->add_option("--policy", args.policy, "lexicographic | adversarial | random");
        sub->add_option("--config", args.config, "comma-separated key=value solver options");
        sub->add_option("--seed", args.seed, "random seed");
        sub->add_option("--timeout", args.timeout_ms, "per-run time limit in ms");
    };

    auto* hs = app.add_subcommand("hs", "greedy clustering into highly connected components");
    add_common(hs);
    auto* hcd = app.add_subcommand("hcd", "exact minimum-deletion clustering");
    add_common(hcd);
    hcd->add_option("--max-component", max_component, "exact-solver component size cap");
    auto* anon = app.add_subcommand("anon", "degree anonymization by edge insertion");
    add_common(anon);
    anon->add_flag("--exact", exact, "exhaustive search instead of the heuristic");
    auto* vclp = app.add_subcommand("vc-lp", "vertex cover via LP bound and branching");
    add_common(vclp);
    auto* vcls = app.add_subcommand("vc-ls", "vertex cover k-exchange local search");
    add_common(vcls);
    vcls->add_option("--cover", cover_arg, "starting cover as comma-separated labels");
    auto* fast = app.add_subcommand("fast-ls", "tournament feedback arc set local search");
    add_common(fast);
    auto* ilc = app.add_subcommand("ilc", "incremental list coloring heuristic");
    add_common(ilc);
    ilc->add_flag("--global", global_budget, "share the budget across insertions");
    auto* ce = app.add_subcommand("ce", "exact cluster editing");
    add_common(ce);
    auto* tune = app.add_subcommand("tune", "sweep cluster-editing configurations over a corpus");
    tune->add_option("--corpus", corpus, "directory of instances")->required();
    tune->add_option("--budget-ms", budget_ms, "per-run time budget in ms");
    tune->add_option("--seed", args.seed, "seed recorded in the report");
    tune->add_option("--output,-o", output, "write the report to a file");
    auto* oracle = app.add_subcommand("oracle", "brute-force reference answers");
    oracle->add_option("--problem", oracle_problem, "hcd | vc | lp | anon | fas | ce")->required();
    add_common(oracle);
    app.add_subcommand("fixtures", "run the bundled demo instances");
    auto* bench = app.add_subcommand("bench", "run a solver over a corpus directory");
    bench->add_option("--corpus", corpus, "directory of instances")->required();
    bench->add_option("--problem", bench_problem, "hs | hcd | anon | vc-lp | vc-ls | fast-ls | ilc | ce")
        ->required();
    bench->add_option("--solver", bench_solver, "problem-specific solver variant");
    add_common(bench, /*needs_input=*/false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (hs->parsed())
            return cmd_hs(args);
        if (hcd->parsed())
            return cmd_hcd(args, max_component);
        if (anon->parsed())
            return cmd_anon(args, exact);
        if (vclp->parsed())
            return cmd_vc_lp(args);
        if (vcls->parsed())
            return cmd_vc_ls(args, cover_arg);
        if (fast->parsed())
            return cmd_fast_ls(args);
        if (ilc->parsed())
            return cmd_ilc(args, global_budget);
        if (ce->parsed())
            return cmd_ce(args);
        if (tune->parsed())
            return cmd_tune(corpus, budget_ms, args.seed, output);
        if (oracle->parsed())
            return cmd_oracle(oracle_problem, args);
        if (app.get_subcommand("fixtures")->parsed())
            return cmd_fixtures();
        if (bench->parsed()) {
            gmod::BenchOptions options;
            options.problem = bench_problem;
            options.solver = bench_solver;
            options.timeout_ms = args.timeout_ms;
            if (args.k >= 0)
                options.params["k"] = std::to_string(args.k);
            options.params["ell"] = std::to_string(args.ell);
            options.params["c"] = std::to_string(args.c);
            options.params["policy"] = args.policy;
            options.params["seed"] = std::to_string(args.seed);
            for (const auto& [key, value] : parse_config_string(args.config))
                options.params[key] = value;
            return cmd_bench(corpus, options);
        }
    } catch (const gmod::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const gmod::ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kExitResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}
