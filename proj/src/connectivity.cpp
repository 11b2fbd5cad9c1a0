#include "gmod/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>
#include <set>

namespace gmod {

namespace {

// Stoer-Wagner on an explicit weight matrix; returns the weight of a global
// minimum cut. Deterministic: ties in the maximum adjacency order go to the
// lowest index.
long long stoer_wagner(std::vector<std::vector<long long>> w) {
    int n = static_cast<int>(w.size());
    std::vector<int> alive(n);
    for (int i = 0; i < n; ++i)
        alive[i] = i;
    long long best = std::numeric_limits<long long>::max();
    while (static_cast<int>(alive.size()) > 1) {
        int m = static_cast<int>(alive.size());
        std::vector<long long> conn(m, 0);
        std::vector<bool> added(m, false);
        int prev = -1, last = -1;
        for (int step = 0; step < m; ++step) {
            int sel = -1;
            for (int i = 0; i < m; ++i)
                if (!added[i] && (sel == -1 || conn[i] > conn[sel]))
                    sel = i;
            added[sel] = true;
            prev = last;
            last = sel;
            for (int i = 0; i < m; ++i)
                if (!added[i])
                    conn[i] += w[alive[sel]][alive[i]];
        }
        best = std::min(best, conn[last]);
        // merge `last` into `prev`
        int a = alive[prev], b = alive[last];
        for (int i = 0; i < m; ++i) {
            int c = alive[i];
            w[a][c] += w[b][c];
            w[c][a] = w[a][c];
        }
        alive.erase(alive.begin() + last);
    }
    return best;
}

// Unit-capacity max flow between s and t on an adjacency-matrix residual
// network (each undirected edge gives capacity 1 in both directions).
// Fills `reachable` with the residual source side when requested.
int max_flow_unit(const Graph& h, int s, int t, std::vector<bool>* reachable = nullptr) {
    int n = h.num_vertices();
    std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v : h.neighbors(u))
            cap[u][v] = 1;
    int flow = 0;
    std::vector<int> parent(n);
    for (;;) {
        std::fill(parent.begin(), parent.end(), -1);
        parent[s] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && parent[t] == -1) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if (parent[v] == -1 && cap[u][v] > 0) {
                    parent[v] = u;
                    q.push(v);
                }
        }
        if (parent[t] == -1)
            break;
        for (int v = t; v != s; v = parent[v]) {
            cap[parent[v]][v] -= 1;
            cap[v][parent[v]] += 1;
        }
        ++flow;
    }
    if (reachable) {
        reachable->assign(n, false);
        (*reachable)[s] = true;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if (!(*reachable)[v] && cap[u][v] > 0) {
                    (*reachable)[v] = true;
                    q.push(v);
                }
        }
    }
    return flow;
}

bool is_connected_induced(const Graph& h) {
    int n = h.num_vertices();
    if (n == 0)
        return false;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : h.neighbors(u))
            if (!seen[v]) {
                seen[v] = true;
                ++cnt;
                stack.push_back(v);
            }
    }
    return cnt == n;
}

Cut make_cut(const Graph& g, const std::vector<int>& component, std::vector<int> side) {
    std::sort(side.begin(), side.end());
    std::vector<int> other;
    std::set<int> in_side(side.begin(), side.end());
    for (int v : component)
        if (!in_side.count(v))
            other.push_back(v);
    std::sort(other.begin(), other.end());
    Cut cut;
    if (other.empty() || (!side.empty() && side.front() < other.front())) {
        cut.side_a = std::move(side);
        cut.side_b = std::move(other);
    } else {
        cut.side_a = std::move(other);
        cut.side_b = std::move(side);
    }
    cut.crossing = crossing_edges(g, cut.side_a, component);
    return cut;
}

// Canonical minimum cut: scan sink vertices in ascending id order from the
// lowest-id source; the first sink whose max flow matches lambda defines the
// cut, taken as the minimal residual source side.
std::vector<int> lexicographic_side(const Graph& h, const std::vector<int>& ids, int lambda) {
    int n = h.num_vertices();
    for (int t = 1; t < n; ++t) {
        std::vector<bool> reach;
        if (max_flow_unit(h, 0, t, &reach) == lambda) {
            std::vector<int> side;
            for (int v = 0; v < n; ++v)
                if (reach[v])
                    side.push_back(ids[v]);
            return side;
        }
    }
    throw std::logic_error("no sink realizes the connectivity value");
}

} // namespace

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> all(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        all[v] = v;
    return connected_components(g, all);
}

std::vector<std::vector<int>> connected_components(const Graph& g, const std::vector<int>& within) {
    std::vector<bool> allowed(g.num_vertices(), false);
    for (int v : within)
        allowed[v] = true;
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<std::vector<int>> comps;
    std::vector<int> order(within);
    std::sort(order.begin(), order.end());
    for (int root : order) {
        if (seen[root])
            continue;
        std::vector<int> comp;
        std::vector<int> stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : g.neighbors(u))
                if (allowed[v] && !seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

int edge_connectivity(const Graph& g, const std::vector<int>& component) {
    if (component.empty())
        throw std::invalid_argument("empty component");
    if (component.size() == 1)
        return 0;
    std::vector<int> ids;
    Graph h = g.induced(component, &ids);
    if (!is_connected_induced(h))
        throw std::invalid_argument("component is not connected");
    if (component.size() == 2)
        return 1;
    int n = h.num_vertices();
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v : h.neighbors(u))
            w[u][v] = 1;
    return static_cast<int>(stoer_wagner(std::move(w)));
}

bool is_highly_connected(const Graph& g, const std::vector<int>& component) {
    if (component.size() == 1)
        return true;
    if (component.size() == 2)
        return false;
    int lambda = edge_connectivity(g, component);
    return 2 * lambda > static_cast<int>(component.size());
}

EdgeSet crossing_edges(const Graph& g, const std::vector<int>& side, const std::vector<int>& component) {
    std::vector<char> in_side(g.num_vertices(), 0), in_comp(g.num_vertices(), 0);
    for (int v : side)
        in_side[v] = 1;
    for (int v : component)
        in_comp[v] = 1;
    EdgeSet out;
    for (int u : side)
        for (int v : g.neighbors(u))
            if (in_comp[v] && !in_side[v])
                out.insert(Edge(u, v));
    return out;
}

Cut min_cut(const Graph& g, const std::vector<int>& component, const TieBreak& policy) {
    if (component.size() < 2)
        throw std::invalid_argument("component too small for a cut");
    std::vector<int> ids;
    Graph h = g.induced(component, &ids);
    if (!is_connected_induced(h))
        throw std::invalid_argument("component is not connected");
    int lambda = edge_connectivity(g, component);
    int n = h.num_vertices();

    switch (policy.kind) {
    case TieBreak::Kind::adversarial:
        for (int v = 0; v < n; ++v)
            if (h.degree(v) == lambda)
                return make_cut(g, component, {ids[v]});
        return make_cut(g, component, lexicographic_side(h, ids, lambda));
    case TieBreak::Kind::random: {
        // Candidate pool: single-vertex minimum cuts plus the canonical
        // flow cut for every sink that realizes lambda, deduplicated by side.
        std::set<std::vector<int>> pool;
        for (int v = 0; v < n; ++v)
            if (h.degree(v) == lambda)
                pool.insert({ids[v]});
        for (int t = 1; t < n; ++t) {
            std::vector<bool> reach;
            if (max_flow_unit(h, 0, t, &reach) == lambda) {
                std::vector<int> side;
                for (int v = 0; v < n; ++v)
                    if (reach[v])
                        side.push_back(ids[v]);
                std::sort(side.begin(), side.end());
                pool.insert(std::move(side));
            }
        }
        std::vector<std::vector<int>> candidates(pool.begin(), pool.end());
        std::mt19937_64 rng(policy.seed);
        std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
        return make_cut(g, component, candidates[dist(rng)]);
    }
    case TieBreak::Kind::lexicographic:
    default:
        return make_cut(g, component, lexicographic_side(h, ids, lambda));
    }
}

} // namespace gmod
