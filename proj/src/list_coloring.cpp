#include "gmod/list_coloring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gmod {

int ListColoringInstance::max_list_size() const {
    std::size_t k = 0;
    for (const auto& l : lists)
        k = std::max(k, l.size());
    return static_cast<int>(k);
}

void ListColoringInstance::validate() const {
    int n = graph.num_vertices();
    if (static_cast<int>(lists.size()) != n || static_cast<int>(coloring.size()) != n)
        throw std::invalid_argument("lists/coloring size mismatch");
    if (target < 0 || target >= n)
        throw std::invalid_argument("target out of range");
    if (budget < 0)
        throw std::invalid_argument("negative budget");
    if (coloring[target] != -1)
        throw std::invalid_argument("target must be uncolored");
    for (int v = 0; v < n; ++v) {
        if (v == target)
            continue;
        if (coloring[v] == -1)
            throw std::invalid_argument("every vertex except the target must be colored");
        if (std::find(lists[v].begin(), lists[v].end(), coloring[v]) == lists[v].end())
            throw std::invalid_argument("assigned color missing from list");
    }
    for (const Edge& e : graph.edges())
        if (e.u != target && e.v != target && coloring[e.u] == coloring[e.v])
            throw std::invalid_argument("old coloring is not proper");
}

namespace {

struct IlcSearch {
    const Graph& g;
    std::vector<std::vector<int>> lists; // sorted copies
    std::vector<int> color;
    std::vector<char> committed;
    long long nodes = 0;

    IlcSearch(const ListColoringInstance& inst)
        : g(inst.graph), lists(inst.lists), color(inst.coloring),
          committed(inst.graph.num_vertices(), 0) {
        for (auto& l : lists) {
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
        }
    }

    // Lowest-id uncommitted vertex that conflicts with a neighbor.
    int find_conflicted() const {
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (committed[v])
                continue;
            for (int u : g.neighbors(v))
                if (color[u] == color[v])
                    return v;
        }
        return -1;
    }

    bool committed_clash(int v, int col) const {
        for (int u : g.neighbors(v))
            if (committed[u] && color[u] == col)
                return true;
        return false;
    }

    bool resolve(int budget) {
        int w = find_conflicted();
        if (w == -1)
            return true;
        if (budget == 0)
            return false;
        ++nodes; // expansion of w
        int old = color[w];
        committed[w] = true;
        for (int col : lists[w]) {
            if (col == old || committed_clash(w, col))
                continue;
            color[w] = col;
            if (resolve(budget - 1))
                return true;
        }
        color[w] = old;
        committed[w] = false;
        return false;
    }
};

long long node_bound(long long k, int c) {
    long long bound = 1, pow = 1;
    for (int i = 1; i <= c; ++i) {
        pow *= k;
        bound += pow;
    }
    return bound;
}

} // namespace

IlcResult ilc_solve(const ListColoringInstance& inst) {
    inst.validate();
    IlcSearch search(inst);
    IlcResult result;
    search.committed[inst.target] = true;
    ++search.nodes; // expansion of the target
    for (int col : search.lists[inst.target]) {
        if (search.committed_clash(inst.target, col))
            continue;
        search.color[inst.target] = col;
        if (search.resolve(inst.budget)) {
            result.coloring = search.color;
            break;
        }
    }
    result.nodes = search.nodes;
    if (result.nodes > node_bound(inst.max_list_size(), inst.budget))
        throw std::logic_error("search exceeded its k^c node bound");
    return result;
}

ColoringRun ilc_color_graph(const Graph& g, const std::vector<std::vector<int>>& lists,
                            int step_budget, bool global_budget) {
    if (static_cast<int>(lists.size()) != g.num_vertices())
        throw std::invalid_argument("lists size mismatch");
    if (step_budget < 0)
        throw std::invalid_argument("negative budget");
    int n = g.num_vertices();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b))
            return g.degree(a) > g.degree(b);
        return a < b;
    });

    ColoringRun run;
    std::vector<int> color(n, -1);
    std::vector<int> inserted;
    std::set<int> used;
    int remaining = step_budget;
    for (int v : order) {
        std::vector<int> sub(inserted);
        sub.push_back(v);
        std::vector<int> ids;
        ListColoringInstance inst;
        inst.graph = g.induced(sub, &ids);
        inst.lists.resize(ids.size());
        inst.coloring.resize(ids.size());
        std::set<int> palette; // every color any instance vertex could take
        for (std::size_t i = 0; i < ids.size(); ++i) {
            inst.lists[i] = lists[ids[i]];
            inst.coloring[i] = color[ids[i]];
            palette.insert(inst.lists[i].begin(), inst.lists[i].end());
            if (ids[i] == v)
                inst.target = static_cast<int>(i);
        }
        inst.budget = global_budget ? remaining : step_budget;

        auto solve_restricted = [&](const std::set<int>& allowed, bool restrict_target,
                                    int budget) {
            ListColoringInstance attempt = inst;
            attempt.budget = budget;
            for (std::size_t i = 0; i < ids.size(); ++i) {
                if (!restrict_target && static_cast<int>(i) == inst.target)
                    continue;
                std::erase_if(attempt.lists[i],
                              [&](int c) { return allowed.find(c) == allowed.end(); });
            }
            IlcResult r = ilc_solve(attempt);
            run.nodes += r.nodes;
            run.node_bound += node_bound(attempt.max_list_size(), attempt.budget);
            return r;
        };

        // Follow greedy while it stays inside the palette in use; spend the
        // recoloring budget only when greedy would open a fresh color (try a
        // palette-preserving repair first) or fails outright.
        std::optional<std::vector<int>> found;
        IlcResult plain = solve_restricted(palette, false, 0);
        if (plain.coloring) {
            found = std::move(plain.coloring);
            if (inst.budget > 0 && !used.count((*found)[inst.target])) {
                IlcResult saved = solve_restricted(used, true, inst.budget);
                if (saved.coloring)
                    found = std::move(saved.coloring);
            }
        } else {
            // No free list color at all: repair, preferring the colors
            // already in use and widening one color at a time.
            std::set<int> allowed(used);
            for (;;) {
                IlcResult r = solve_restricted(allowed, false, inst.budget);
                if (r.coloring) {
                    found = std::move(r.coloring);
                    break;
                }
                bool widened = false;
                for (int c : palette)
                    if (allowed.insert(c).second) {
                        widened = true;
                        break;
                    }
                if (!widened)
                    break; // the last attempt already ran unrestricted
            }
        }
        if (!found) {
            run.coloring = std::nullopt;
            return run;
        }
        if (global_budget) {
            for (std::size_t i = 0; i < ids.size(); ++i)
                if (ids[i] != v && (*found)[i] != color[ids[i]])
                    --remaining;
        }
        for (std::size_t i = 0; i < ids.size(); ++i)
            color[ids[i]] = (*found)[i];
        used.clear();
        for (int u : sub)
            used.insert(color[u]);
        inserted.push_back(v);
    }
    run.coloring = std::move(color);
    return run;
}

std::optional<std::vector<int>> greedy_color(const Graph& g,
                                             const std::vector<std::vector<int>>& lists) {
    if (static_cast<int>(lists.size()) != g.num_vertices())
        throw std::invalid_argument("lists size mismatch");
    int n = g.num_vertices();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b))
            return g.degree(a) > g.degree(b);
        return a < b;
    });
    std::vector<int> color(n, -1);
    for (int v : order) {
        std::vector<int> list = lists[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        int chosen = -1;
        for (int col : list) {
            bool clash = false;
            for (int u : g.neighbors(v))
                if (color[u] == col) {
                    clash = true;
                    break;
                }
            if (!clash) {
                chosen = col;
                break;
            }
        }
        if (chosen == -1)
            return std::nullopt;
        color[v] = chosen;
    }
    return color;
}

int color_count(const std::vector<int>& coloring) {
    std::set<int> used;
    for (int c : coloring)
        if (c != -1)
            used.insert(c);
    return static_cast<int>(used.size());
}

} // namespace gmod
