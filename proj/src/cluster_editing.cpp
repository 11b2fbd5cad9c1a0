#include "gmod/cluster_editing.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace gmod {

namespace {

// Canonical triple order: by center, then by the sorted endpoints.
struct TripleKey {
    int v, u, w;
    auto operator<=>(const TripleKey&) const = default;
};

bool edge_of(const WeightedCeInstance& inst, int a, int b) {
    return inst.weight[a][b] > 0;
}

std::vector<TripleKey> all_triples(const WeightedCeInstance& inst) {
    std::vector<TripleKey> out;
    int n = inst.size();
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) {
            if (u == v || !edge_of(inst, u, v))
                continue;
            for (int w = u + 1; w < n; ++w) {
                if (w == v || !edge_of(inst, w, v) || edge_of(inst, u, w))
                    continue;
                out.push_back({v, u, w});
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<ConflictTriple> pick_triple(const WeightedCeInstance& inst, CeBranchOrder order) {
    auto triples = all_triples(inst);
    if (triples.empty())
        return std::nullopt;
    if (order == CeBranchOrder::min_id) {
        const TripleKey& t = triples.front();
        return ConflictTriple{t.u, t.v, t.w};
    }
    // max_conflict: the edge occurring in the most triples, then the first
    // triple through that edge.
    std::map<std::pair<int, int>, int> edge_count;
    auto bump = [&](int a, int b) { ++edge_count[{std::min(a, b), std::max(a, b)}]; };
    for (const TripleKey& t : triples) {
        bump(t.u, t.v);
        bump(t.v, t.w);
    }
    std::pair<int, int> best_edge;
    int best = -1;
    for (const auto& [e, c] : edge_count)
        if (c > best) {
            best = c;
            best_edge = e;
        }
    for (const TripleKey& t : triples) {
        auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
        if (norm(t.u, t.v) == best_edge || norm(t.v, t.w) == best_edge)
            return ConflictTriple{t.u, t.v, t.w};
    }
    return std::nullopt; // unreachable
}

long long packing_bound(const WeightedCeInstance& inst) {
    long long bound = 0;
    std::set<std::pair<int, int>> used;
    auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (const TripleKey& t : all_triples(inst)) {
        auto uv = norm(t.u, t.v), vw = norm(t.v, t.w), uw = norm(t.u, t.w);
        if (used.count(uv) || used.count(vw) || used.count(uw))
            continue;
        used.insert(uv);
        used.insert(vw);
        used.insert(uw);
        bound += std::min({inst.weight[t.u][t.v], inst.weight[t.v][t.w], -inst.weight[t.u][t.w]});
    }
    return bound;
}

// Merge every class of adjacent super-vertices with identical weight rows
// (the weighted form of a critical clique) into one super-vertex.
WeightedCeInstance merge_twins(WeightedCeInstance inst) {
    for (;;) {
        int n = inst.size();
        std::vector<int> cls(n, -1);
        auto same_class = [&](int u, int v) {
            if (inst.weight[u][v] <= 0)
                return false;
            for (int x = 0; x < n; ++x)
                if (x != u && x != v && inst.weight[u][x] != inst.weight[v][x])
                    return false;
            return true;
        };
        int num_classes = 0;
        bool any_merge = false;
        for (int u = 0; u < n; ++u) {
            if (cls[u] != -1)
                continue;
            cls[u] = num_classes++;
            for (int v = u + 1; v < n; ++v)
                if (cls[v] == -1 && same_class(u, v)) {
                    cls[v] = cls[u];
                    any_merge = true;
                }
        }
        if (!any_merge)
            return inst;
        WeightedCeInstance next;
        next.weight.assign(num_classes, std::vector<long long>(num_classes, 0));
        next.members.resize(num_classes);
        for (int u = 0; u < n; ++u) {
            auto& m = next.members[cls[u]];
            m.insert(m.end(), inst.members[u].begin(), inst.members[u].end());
        }
        for (auto& m : next.members)
            std::sort(m.begin(), m.end());
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (cls[u] != cls[v])
                    next.weight[cls[u]][cls[v]] += inst.weight[u][v];
        inst = std::move(next);
    }
}

struct CeSearch {
    const CeConfig& cfg;
    long long big;            // lock weight; any locked edit overshoots the budget
    long long best_cost;      // current best, starts at k+1
    std::optional<EditSet> best;
    CeSolveStats stats;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    bool aborted = false;

    CeSearch(const CeConfig& c, int k,
             std::optional<std::chrono::steady_clock::time_point> dl)
        : cfg(c), big(static_cast<long long>(k) + 1), best_cost(static_cast<long long>(k) + 1),
          deadline(dl) {}

    void run(WeightedCeInstance inst, EditSet edits, long long spent, int depth) {
        ++stats.nodes;
        if (deadline && (stats.nodes & 0x3FF) == 0 &&
            std::chrono::steady_clock::now() > *deadline)
            aborted = true;
        if (aborted || spent >= best_cost)
            return;
        if (cfg.reduction == CeReduction::critical_clique && depth % cfg.reduction_period == 0)
            inst = merge_twins(std::move(inst));
        if (cfg.lower_bound == CeLowerBound::p3_packing && spent + packing_bound(inst) >= best_cost)
            return;
        auto triple = pick_triple(inst, cfg.branch_order);
        if (!triple) {
            best_cost = spent;
            best = std::move(edits);
            return;
        }
        int u = triple->u, v = triple->v, w = triple->w;
        branch_edit(inst, edits, spent, depth, u, v, false);
        branch_edit(inst, edits, spent, depth, v, w, false);
        branch_edit(inst, edits, spent, depth, u, w, true);
    }

    void branch_edit(const WeightedCeInstance& inst, const EditSet& edits, long long spent,
                     int depth, int a, int b, bool insert) {
        if (aborted)
            return;
        long long cost = insert ? -inst.weight[a][b] : inst.weight[a][b];
        if (cost >= big || spent + cost >= best_cost)
            return;
        WeightedCeInstance next = inst;
        next.weight[a][b] = next.weight[b][a] = insert ? big : -big;
        EditSet next_edits = edits;
        for (int x : inst.members[a])
            for (int y : inst.members[b]) {
                if (insert)
                    next_edits.insertions.insert(Edge(x, y));
                else
                    next_edits.deletions.insert(Edge(x, y));
            }
        run(std::move(next), std::move(next_edits), spent + cost, depth + 1);
    }
};

} // namespace

std::optional<ConflictTriple> find_conflict_triple(const Graph& g, CeBranchOrder order) {
    return pick_triple(WeightedCeInstance::from_graph(g), order);
}

int ce_lower_bound(const Graph& g, const CeConfig& cfg) {
    if (cfg.lower_bound == CeLowerBound::none)
        return 0;
    return static_cast<int>(packing_bound(WeightedCeInstance::from_graph(g)));
}

WeightedCeInstance WeightedCeInstance::from_graph(const Graph& g) {
    WeightedCeInstance inst;
    int n = g.num_vertices();
    inst.weight.assign(n, std::vector<long long>(n, 0));
    inst.members.resize(n);
    for (int v = 0; v < n; ++v)
        inst.members[v] = {v};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                inst.weight[u][v] = g.has_edge(u, v) ? 1 : -1;
    return inst;
}

CeReduceResult ce_reduce(const Graph& g, int budget) {
    if (budget < 0)
        throw std::invalid_argument("budget must be non-negative");
    CeReduceResult res;
    res.reduced = merge_twins(WeightedCeInstance::from_graph(g));
    res.residual_budget = budget;
    res.infeasible = false; // merging alone never forces edits
    return res;
}

std::optional<EditSet> ce_solve(const Graph& g, int k, const CeConfig& cfg, CeSolveStats* stats,
                                std::optional<std::chrono::steady_clock::time_point> deadline) {
    if (k < 0)
        throw std::invalid_argument("budget must be non-negative");
    if (cfg.reduction_period < 1)
        throw std::invalid_argument("reduction period must be positive");
    CeSearch search(cfg, k, deadline);
    search.run(WeightedCeInstance::from_graph(g), EditSet{}, 0, 0);
    if (stats) {
        *stats = search.stats;
        stats->timed_out = search.aborted;
    }
    if (search.aborted)
        return std::nullopt;
    return search.best;
}

} // namespace gmod
