#include "gmod/bench.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iterator>

#include <json.hpp>

#include "gmod/anonymity.hpp"
#include "gmod/cluster_editing.hpp"
#include "gmod/connectivity.hpp"
#include "gmod/fixtures.hpp"
#include "gmod/hcd.hpp"
#include "gmod/io.hpp"
#include "gmod/list_coloring.hpp"
#include "gmod/tournament.hpp"
#include "gmod/vertex_cover.hpp"

namespace gmod {

std::string to_json(const ResultRecord& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["problem"] = r.problem;
    j["instance"] = r.instance;
    j["solver"] = r.solver;
    j["params"] = r.params;
    j["status"] = r.status;
    j["cost"] = r.cost;
    j["nodes"] = r.nodes;
    j["wall_ms"] = r.wall_ms;
    j["valid"] = r.valid;
    if (!r.detail.empty())
        j["detail"] = r.detail;
    return j.dump();
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

bool hcd_solution_valid(const Graph& g, const HcdSolution& sol) {
    if (static_cast<int>(sol.deleted.size()) != sol.cost)
        return false;
    Graph h = remove_edges(g, sol.deleted);
    auto comps = connected_components(h);
    if (comps.size() != sol.clusters.clusters.size())
        return false;
    for (const auto& comp : comps)
        if (!is_highly_connected(h, comp))
            return false;
    return is_partition_of(sol.clusters, g.num_vertices());
}

TieBreak policy_from(const std::map<std::string, std::string>& params) {
    TieBreak tb;
    auto it = params.find("policy");
    if (it != params.end()) {
        if (it->second == "lexicographic")
            tb.kind = TieBreak::Kind::lexicographic;
        else if (it->second == "adversarial")
            tb.kind = TieBreak::Kind::adversarial;
        else if (it->second == "random")
            tb.kind = TieBreak::Kind::random;
        else
            throw std::invalid_argument("unknown policy: " + it->second);
    }
    auto seed = params.find("seed");
    if (seed != params.end())
        tb.seed = std::stoull(seed->second);
    return tb;
}

long long param_int(const std::map<std::string, std::string>& params, const std::string& key,
                    long long fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : std::stoll(it->second);
}

CeConfig config_from(const std::map<std::string, std::string>& params) {
    CeConfig cfg;
    auto get = [&](const char* key) -> std::string {
        auto it = params.find(key);
        return it == params.end() ? std::string() : it->second;
    };
    std::string lb = get("lower_bound");
    if (lb == "none")
        cfg.lower_bound = CeLowerBound::none;
    else if (lb == "p3_packing" || lb.empty())
        cfg.lower_bound = CeLowerBound::p3_packing;
    else
        throw std::invalid_argument("unknown lower bound: " + lb);
    std::string red = get("reduction");
    if (red == "none")
        cfg.reduction = CeReduction::none;
    else if (red == "critical_clique" || red.empty())
        cfg.reduction = CeReduction::critical_clique;
    else
        throw std::invalid_argument("unknown reduction: " + red);
    cfg.reduction_period = static_cast<int>(param_int(params, "period", 1));
    std::string order = get("order");
    if (order == "max_conflict")
        cfg.branch_order = CeBranchOrder::max_conflict;
    else if (order == "min_id" || order.empty())
        cfg.branch_order = CeBranchOrder::min_id;
    else
        throw std::invalid_argument("unknown branch order: " + order);
    cfg.seed = static_cast<std::uint64_t>(param_int(params, "seed", 0));
    return cfg;
}

// Deterministic starting cover: both endpoints of a greedy maximal matching.
std::vector<int> matching_cover(const Graph& g) {
    std::vector<char> used(g.num_vertices(), 0);
    std::vector<int> cover;
    for (const Edge& e : g.edges())
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = 1;
            cover.push_back(e.u);
            cover.push_back(e.v);
        }
    std::sort(cover.begin(), cover.end());
    return cover;
}

ResultRecord run_graph_problem(const std::string& problem, const std::string& solver,
                               const std::string& instance_id, const Graph& g,
                               const std::map<std::string, std::string>& params,
                               long long timeout_ms) {
    ResultRecord rec;
    rec.problem = problem;
    rec.instance = instance_id;
    rec.solver = solver;
    rec.params = params;
    Timer timer;

    if (problem == "hs") {
        auto sol = hs_cluster(g, policy_from(params));
        rec.cost = sol.cost;
        rec.status = "ok";
        rec.valid = hcd_solution_valid(g, sol);
        rec.detail["clusters"] = std::to_string(sol.clusters.clusters.size());
    } else if (problem == "hcd") {
        int k = static_cast<int>(param_int(params, "k", g.num_edges()));
        auto sol = hcd_exact(g, k);
        if (!sol) {
            rec.status = "infeasible";
        } else {
            rec.cost = sol->cost;
            rec.status = "ok";
            rec.valid = hcd_solution_valid(g, *sol) && sol->cost <= k;
            rec.detail["clusters"] = std::to_string(sol->clusters.clusters.size());
        }
    } else if (problem == "anon") {
        int ell = static_cast<int>(param_int(params, "ell", 2));
        if (solver == "exact") {
            int k = static_cast<int>(param_int(params, "k", g.num_vertices()));
            auto edits = anon_exact(g, ell, k);
            if (!edits) {
                rec.status = "infeasible";
            } else {
                rec.cost = edits->size();
                rec.status = "ok";
                rec.valid = is_l_anonymous(apply_edits(g, *edits), ell);
            }
        } else {
            auto edits = lt_heuristic(g, ell);
            rec.cost = edits.size();
            rec.status = "ok";
            rec.valid = is_l_anonymous(apply_edits(g, edits), ell);
            long long lb = anon_insertion_lower_bound(g, ell);
            rec.detail["lower_bound"] = std::to_string(lb);
            rec.detail["certified_optimal"] =
                win_win_certificate(DegreeSequence::of(g).delta_max(), lb) ? "true" : "false";
        }
    } else if (problem == "vc-lp") {
        int k = static_cast<int>(param_int(params, "k", g.num_vertices()));
        auto lp = lp_half_integral(g);
        rec.detail["lp"] = rational_string(lp.lp_twice);
        auto cover = vc_above_lp(g, k);
        if (!cover) {
            rec.status = "infeasible";
        } else {
            rec.cost = static_cast<long long>(cover->size());
            rec.status = "ok";
            rec.valid = is_vertex_cover(g, *cover) && static_cast<int>(cover->size()) <= k;
        }
    } else if (problem == "vc-ls") {
        int k = static_cast<int>(param_int(params, "k", 3));
        std::vector<int> cover = matching_cover(g);
        int rounds = 0;
        while (auto better = ls_vertex_cover(g, cover, k)) {
            cover = *better;
            ++rounds;
        }
        rec.cost = static_cast<long long>(cover.size());
        rec.status = "ok";
        rec.valid = is_vertex_cover(g, cover);
        rec.detail["rounds"] = std::to_string(rounds);
    } else if (problem == "ce") {
        int k = static_cast<int>(param_int(params, "k", g.num_vertices() * g.num_vertices()));
        CeSolveStats stats;
        std::optional<std::chrono::steady_clock::time_point> deadline;
        if (timeout_ms > 0)
            deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
        auto edits = ce_solve(g, k, config_from(params), &stats, deadline);
        rec.nodes = stats.nodes;
        if (stats.timed_out) {
            rec.status = "timeout";
        } else if (!edits) {
            rec.status = "infeasible";
        } else {
            rec.cost = edits->size();
            rec.status = "ok";
            Graph h = apply_edits(g, *edits);
            rec.valid = !find_conflict_triple(h, CeBranchOrder::min_id).has_value();
        }
    } else {
        throw std::invalid_argument("unknown graph problem: " + problem);
    }
    rec.wall_ms = timer.ms();
    return rec;
}

ResultRecord run_tournament_problem(const std::string& instance_id, const Tournament& t,
                                    const std::map<std::string, std::string>& params) {
    ResultRecord rec;
    rec.problem = "fast-ls";
    rec.instance = instance_id;
    rec.solver = "ls";
    rec.params = params;
    Timer timer;
    int k = static_cast<int>(param_int(params, "k", 3));
    // default seed solution: the backward arcs of the identity permutation
    ArcSet sol;
    auto seed_kind = params.find("seed_solution");
    if (seed_kind == params.end() || seed_kind->second == "backward") {
        for (const Arc& a : t.arcs())
            if (a.from > a.to)
                sol.insert(a);
    } else if (seed_kind->second != "empty") {
        throw std::invalid_argument("unknown seed_solution: " + seed_kind->second);
    }
    int rounds = 0;
    while (auto better = ls_fast(t, sol, k)) {
        sol = *better;
        ++rounds;
    }
    rec.cost = static_cast<long long>(sol.size());
    rec.status = "ok";
    rec.valid = is_acyclic_after(t, sol);
    rec.detail["rounds"] = std::to_string(rounds);
    rec.wall_ms = timer.ms();
    return rec;
}

ResultRecord run_listcoloring_problem(const std::string& instance_id, const ListColoringFile& f,
                                      const std::map<std::string, std::string>& params) {
    ResultRecord rec;
    rec.problem = "ilc";
    rec.instance = instance_id;
    rec.params = params;
    Timer timer;
    int c = static_cast<int>(param_int(params, "c", 0));
    rec.solver = "ilc";
    auto run = ilc_color_graph(f.graph, f.lists, c);
    rec.nodes = run.nodes;
    if (!run.coloring) {
        rec.status = "none";
    } else {
        rec.cost = color_count(*run.coloring);
        rec.status = "ok";
        bool proper = true;
        for (const Edge& e : f.graph.edges())
            if ((*run.coloring)[e.u] == (*run.coloring)[e.v])
                proper = false;
        for (int v = 0; v < f.graph.num_vertices() && proper; ++v)
            proper = std::find(f.lists[v].begin(), f.lists[v].end(), (*run.coloring)[v]) !=
                     f.lists[v].end();
        rec.valid = proper && run.nodes <= run.node_bound;
        if (auto greedy = greedy_color(f.graph, f.lists))
            rec.detail["greedy_colors"] = std::to_string(color_count(*greedy));
    }
    rec.wall_ms = timer.ms();
    return rec;
}

} // namespace

std::vector<ResultRecord> run_builtin_fixtures() {
    std::vector<ResultRecord> out;
    out.push_back(run_graph_problem("hcd", "exact", "hcd-demo", fixtures::hcd_demo(),
                                    {{"k", "3"}}, 0));
    out.push_back(run_graph_problem("anon", "lt", "anon-demo", fixtures::anonymity_demo(),
                                    {{"ell", "2"}}, 0));
    {
        // cover improvement demo: documented size-5 cover, k = 3
        ResultRecord rec;
        rec.problem = "vc-ls";
        rec.instance = "lsvc-demo";
        rec.solver = "ls";
        rec.params = {{"k", "3"}};
        Timer timer;
        Graph g = fixtures::local_search_cover_demo();
        std::vector<int> start = fixtures::local_search_cover_demo_cover();
        auto better = ls_vertex_cover(g, start, 3);
        if (better) {
            rec.cost = static_cast<long long>(better->size());
            rec.status = "ok";
            std::vector<int> diff;
            std::set_symmetric_difference(start.begin(), start.end(), better->begin(),
                                          better->end(), std::back_inserter(diff));
            rec.valid = is_vertex_cover(g, *better) && better->size() < start.size() &&
                        static_cast<int>(diff.size()) <= 3;
            rec.detail["start_size"] = std::to_string(start.size());
        } else {
            rec.status = "none";
        }
        rec.wall_ms = timer.ms();
        out.push_back(rec);
    }
    out.push_back(run_graph_problem("vc-lp", "above_lp", "vclp-demo", fixtures::above_lp_demo(),
                                    {{"k", "3"}}, 0));
    return out;
}

std::vector<ResultRecord> bench_directory(const std::string& dir, const BenchOptions& options) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file())
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<ResultRecord> out;
    for (const fs::path& path : files) {
        std::string id = path.filename().string();
        InstanceFormat fmt = guess_format(path.string());
        ResultRecord rec;
        try {
            if (options.problem == "fast-ls") {
                if (fmt != InstanceFormat::tournament)
                    continue;
                rec = run_tournament_problem(id, load_tournament(path.string()), options.params);
            } else if (options.problem == "ilc") {
                if (fmt != InstanceFormat::listcoloring)
                    continue;
                rec = run_listcoloring_problem(id, load_listcoloring(path.string()),
                                               options.params);
            } else {
                if (fmt != InstanceFormat::edge_list && fmt != InstanceFormat::dimacs)
                    continue;
                LabeledGraph lg = load_graph(path.string(), fmt);
                rec = run_graph_problem(options.problem, options.solver, id, lg.graph,
                                        options.params, options.timeout_ms);
            }
        } catch (const std::exception& e) {
            rec = ResultRecord{};
            rec.problem = options.problem;
            rec.instance = id;
            rec.solver = options.solver;
            rec.params = options.params;
            rec.status = std::string("error: ") + e.what();
        }
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace gmod
