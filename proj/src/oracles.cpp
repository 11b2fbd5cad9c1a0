#include "gmod/oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "gmod/connectivity.hpp"
#include "gmod/errors.hpp"

namespace gmod::brute {

int min_cut_size(const Graph& g, const std::vector<int>& component) {
    if (component.size() > 20)
        throw ResourceCapError("component too large for cut enumeration");
    int c = static_cast<int>(component.size());
    if (c < 2)
        throw std::invalid_argument("component too small for a cut");
    int best = std::numeric_limits<int>::max();
    // bit i-1 of `side` controls component[i]; component[0] is always inside,
    // and the all-ones pattern (no cut at all) is excluded
    for (unsigned side = 0; side + 1 < (1u << (c - 1)); ++side) {
        int crossing = 0;
        auto in_side = [&](int v) {
            for (int i = 0; i < c; ++i)
                if (component[i] == v)
                    return i == 0 || (side >> (i - 1) & 1u);
            return false;
        };
        std::vector<char> comp_flag(g.num_vertices(), 0);
        for (int v : component)
            comp_flag[v] = 1;
        for (int i = 0; i < c; ++i) {
            int u = component[i];
            if (!in_side(u))
                continue;
            for (int w : g.neighbors(u))
                if (comp_flag[w] && !in_side(w))
                    ++crossing;
        }
        best = std::min(best, crossing);
    }
    return best;
}

namespace {

// Visits every partition of 0..n-1 into nonempty blocks.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> block(n, 0);
    std::function<void(int, int)> rec = [&](int v, int blocks) {
        if (v == n) {
            visit(block);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            block[v] = b;
            rec(v + 1, std::max(blocks, b + 1));
        }
    };
    if (n > 0)
        rec(0, 0);
    else
        visit(block);
}

} // namespace

int hcd_opt(const Graph& g) {
    if (g.num_vertices() > 11)
        throw ResourceCapError("graph too large for partition enumeration");
    int n = g.num_vertices();
    int best = std::numeric_limits<int>::max();
    auto edges = g.edges();
    for_each_partition(n, [&](const std::vector<int>& block) {
        int crossing = 0;
        for (const Edge& e : edges)
            if (block[e.u] != block[e.v])
                ++crossing;
        if (crossing >= best)
            return;
        int blocks = n == 0 ? 0 : 1 + *std::max_element(block.begin(), block.end());
        for (int b = 0; b < blocks; ++b) {
            std::vector<int> part;
            for (int v = 0; v < n; ++v)
                if (block[v] == b)
                    part.push_back(v);
            if (connected_components(g, part).size() != 1 || !is_highly_connected(g, part))
                return;
        }
        best = crossing;
    });
    return n == 0 ? 0 : best;
}

std::optional<EdgeSet> hcd_edge_subset_search(const Graph& g, int k) {
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    auto valid = [&](const EdgeSet& del) {
        Graph h = remove_edges(g, del);
        for (const auto& comp : connected_components(h))
            if (!is_highly_connected(h, comp))
                return false;
        return true;
    };
    std::vector<int> idx;
    std::optional<EdgeSet> found;
    std::function<bool(int, int, int)> rec = [&](int want, int pos, int from) {
        if (pos == want) {
            EdgeSet del;
            for (int i = 0; i < want; ++i)
                del.insert(edges[idx[i]]);
            if (!valid(del))
                return false;
            found = std::move(del);
            return true;
        }
        for (int c = from; c < m; ++c) {
            idx[pos] = c;
            if (rec(want, pos + 1, c + 1))
                return true;
        }
        return false;
    };
    for (int want = 0; want <= std::min(k, m); ++want) {
        idx.assign(want, 0);
        if (rec(want, 0, 0))
            return found;
    }
    return std::nullopt;
}

int anon_grouping_opt(const std::vector<int>& degrees, int ell) {
    int n = static_cast<int>(degrees.size());
    if (ell < 1 || ell > n)
        throw std::invalid_argument("ell must satisfy 1 <= ell <= n");
    std::vector<int> sorted(degrees);
    std::sort(sorted.rbegin(), sorted.rend());
    std::vector<long long> prefix(n + 1, 0);
    for (int i = 0; i < n; ++i)
        prefix[i + 1] = prefix[i] + sorted[i];
    // plain recursion over all block partitions with size >= ell
    std::function<long long(int)> rec = [&](int i) -> long long {
        if (i == n)
            return 0;
        long long best = std::numeric_limits<long long>::max() / 2;
        for (int j = i + ell; j <= n; ++j) {
            long long raise = static_cast<long long>(sorted[i]) * (j - i) - (prefix[j] - prefix[i]);
            best = std::min(best, raise + rec(j));
        }
        return best;
    };
    return static_cast<int>(rec(0));
}

int vc_opt(const Graph& g) {
    if (g.num_vertices() > 20)
        throw ResourceCapError("graph too large for cover enumeration");
    int n = g.num_vertices();
    auto edges = g.edges();
    for (int size = 0; size <= n; ++size) {
        std::vector<int> idx;
        std::function<bool(int, int)> rec = [&](int pos, int from) {
            if (pos == size) {
                std::vector<char> in(n, 0);
                for (int v : idx)
                    in[v] = 1;
                for (const Edge& e : edges)
                    if (!in[e.u] && !in[e.v])
                        return false;
                return true;
            }
            for (int v = from; v < n; ++v) {
                idx.push_back(v);
                if (rec(pos + 1, v + 1))
                    return true;
                idx.pop_back();
            }
            return false;
        };
        if (rec(0, 0))
            return size;
    }
    return n;
}

int lp_opt_twice(const Graph& g) {
    if (g.num_vertices() > 12)
        throw ResourceCapError("graph too large for half-integral enumeration");
    int n = g.num_vertices();
    auto edges = g.edges();
    int best = 2 * n;
    std::vector<int> val(n, 0);
    std::function<void(int, int)> rec = [&](int v, int sum) {
        if (sum >= best)
            return;
        if (v == n) {
            for (const Edge& e : edges)
                if (val[e.u] + val[e.v] < 2)
                    return;
            best = sum;
            return;
        }
        for (int x = 0; x <= 2; ++x) {
            val[v] = x;
            rec(v + 1, sum + x);
        }
    };
    rec(0, 0);
    return best;
}

int fas_opt(const Tournament& t) {
    if (t.num_vertices() > 7)
        throw ResourceCapError("tournament too large for arc-subset enumeration");
    auto arcs = t.arcs();
    int m = static_cast<int>(arcs.size());
    for (int size = 0; size <= m; ++size) {
        std::vector<int> idx;
        std::function<bool(int, int)> rec = [&](int pos, int from) {
            if (pos == size) {
                ArcSet s;
                for (int i : idx)
                    s.insert(arcs[i]);
                return is_acyclic_after(t, s);
            }
            for (int c = from; c < m; ++c) {
                idx.push_back(c);
                if (rec(pos + 1, c + 1))
                    return true;
                idx.pop_back();
            }
            return false;
        };
        if (rec(0, 0))
            return size;
    }
    return m;
}

int ce_opt(const Graph& g) {
    if (g.num_vertices() > 11)
        throw ResourceCapError("graph too large for partition enumeration");
    int n = g.num_vertices();
    int best = std::numeric_limits<int>::max();
    for_each_partition(n, [&](const std::vector<int>& block) {
        int cost = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                bool same = block[u] == block[v];
                bool edge = g.has_edge(u, v);
                if (same != edge)
                    ++cost;
            }
        best = std::min(best, cost);
    });
    return n == 0 ? 0 : best;
}

std::optional<std::vector<int>> ilc_search(const ListColoringInstance& inst) {
    inst.validate();
    int n = inst.graph.num_vertices();
    std::vector<int> color(n, -1);
    std::function<std::optional<std::vector<int>>(int)> rec =
        [&](int v) -> std::optional<std::vector<int>> {
        if (v == n) {
            int changed = 0;
            for (int u = 0; u < n; ++u)
                if (u != inst.target && color[u] != inst.coloring[u])
                    ++changed;
            if (changed > inst.budget)
                return std::nullopt;
            for (const Edge& e : inst.graph.edges())
                if (color[e.u] == color[e.v])
                    return std::nullopt;
            return color;
        }
        for (int c : inst.lists[v]) {
            color[v] = c;
            if (auto r = rec(v + 1))
                return r;
        }
        color[v] = -1;
        return std::nullopt;
    };
    return rec(0);
}

} // namespace gmod::brute
