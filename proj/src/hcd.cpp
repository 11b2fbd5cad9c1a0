#include "gmod/hcd.hpp"

#include "gmod/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace gmod {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (counter + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    return x;
}

} // namespace

HcdSolution hs_cluster(const Graph& g, const TieBreak& policy) {
    HcdSolution sol;
    Graph working = g;
    auto comps = connected_components(working);
    std::vector<std::vector<int>> stack(comps.rbegin(), comps.rend());
    std::uint64_t calls = 0;
    while (!stack.empty()) {
        std::vector<int> comp = std::move(stack.back());
        stack.pop_back();
        if (is_highly_connected(working, comp)) {
            sol.clusters.clusters.push_back(std::move(comp));
            continue;
        }
        TieBreak p = policy;
        if (p.kind == TieBreak::Kind::random)
            p.seed = mix_seed(policy.seed, calls);
        ++calls;
        Cut cut = min_cut(working, comp, p);
        for (const Edge& e : cut.crossing) {
            working.remove_edge(e.u, e.v);
            sol.deleted.insert(e);
        }
        // smaller side on top of the stack so it is processed first
        auto push_side = [&](const std::vector<int>& side) {
            for (auto& piece : connected_components(working, side))
                stack.push_back(std::move(piece));
        };
        if (cut.side_a.size() <= cut.side_b.size()) {
            push_side(cut.side_b);
            push_side(cut.side_a);
        } else {
            push_side(cut.side_a);
            push_side(cut.side_b);
        }
    }
    std::sort(sol.clusters.clusters.begin(), sol.clusters.clusters.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    sol.cost = static_cast<int>(sol.deleted.size());
    return sol;
}

HcdReduction hcd_reduce(const Graph& g, int k) {
    if (k < 0)
        throw std::invalid_argument("budget must be non-negative");
    HcdReduction red;
    red.residual_k = k;
    std::vector<int> kept;
    for (auto& comp : connected_components(g)) {
        if (is_highly_connected(g, comp)) {
            red.settled.push_back(std::move(comp));
            continue;
        }
        if (edge_connectivity(g, comp) > k)
            red.infeasible = true;
        kept.insert(kept.end(), comp.begin(), comp.end());
    }
    red.reduced = g.induced(kept, &red.reduced_ids);
    return red;
}

int hcd_lower_bound(const Graph& g) {
    int bound = 0;
    for (const auto& comp : connected_components(g))
        if (!is_highly_connected(g, comp))
            bound += edge_connectivity(g, comp);
    return bound;
}

namespace {

using Mask = std::uint64_t;

// Exact search over one connected component, on local ids 0..n-1 with
// bitmask adjacency. Memo entries either hold the exact optimum
// (value <= cap) or certify that the optimum exceeds `cap`.
struct ComponentSolver {
    std::vector<Mask> adj;
    int n = 0;
    struct Entry {
        long long value = 0;
        long long cap = -1;
        Mask split = 0; // chosen side; 0 when the mask itself is a cluster
    };
    std::unordered_map<Mask, Entry> memo;
    std::unordered_map<Mask, bool> hc_memo;

    explicit ComponentSolver(const Graph& h) : adj(h.num_vertices(), 0), n(h.num_vertices()) {
        for (int u = 0; u < n; ++u)
            for (int v : h.neighbors(u))
                adj[u] |= Mask{1} << v;
    }

    static int lowest(Mask m) { return std::countr_zero(m); }

    Mask component_of(Mask mask, int start) const {
        Mask seen = Mask{1} << start;
        Mask frontier = seen;
        while (frontier) {
            Mask next = 0;
            Mask f = frontier;
            while (f) {
                int v = lowest(f);
                f &= f - 1;
                next |= adj[v] & mask;
            }
            next &= ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    bool highly_connected(Mask mask) {
        auto it = hc_memo.find(mask);
        if (it != hc_memo.end())
            return it->second;
        int size = std::popcount(mask);
        bool hc;
        if (size == 1) {
            hc = true;
        } else if (size == 2) {
            hc = false;
        } else {
            hc = 2 * lambda_of(mask) > size;
        }
        hc_memo.emplace(mask, hc);
        return hc;
    }

    // Stoer-Wagner on the submask-induced subgraph.
    int lambda_of(Mask mask) const {
        std::vector<int> vs;
        for (Mask m = mask; m; m &= m - 1)
            vs.push_back(lowest(m));
        int k = static_cast<int>(vs.size());
        std::vector<std::vector<int>> w(k, std::vector<int>(k, 0));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (adj[vs[i]] >> vs[j] & 1)
                    w[i][j] = w[j][i] = 1;
        std::vector<int> alive(k);
        for (int i = 0; i < k; ++i)
            alive[i] = i;
        int best = std::numeric_limits<int>::max();
        while (alive.size() > 1) {
            int m = static_cast<int>(alive.size());
            std::vector<int> conn(m, 0);
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
            int a = alive[prev], b = alive[last];
            for (int i = 0; i < m; ++i) {
                w[a][alive[i]] += w[b][alive[i]];
                w[alive[i]][a] = w[a][alive[i]];
            }
            alive.erase(alive.begin() + last);
        }
        return best;
    }

    long long crossing_count(Mask side, Mask rest) const {
        long long c = 0;
        for (Mask m = side; m; m &= m - 1)
            c += std::popcount(adj[lowest(m)] & rest);
        return c;
    }

    // Minimum cost to make every component of `mask` highly connected;
    // returns cap+1 when the optimum exceeds cap.
    long long solve(Mask mask, long long cap) {
        if (cap < 0)
            return cap + 1;
        Mask first = component_of(mask, lowest(mask));
        if (first != mask) {
            long long spent = 0;
            Mask rest = mask;
            while (rest) {
                Mask part = component_of(rest, lowest(rest));
                rest &= ~part;
                long long r = solve(part, cap - spent);
                if (r > cap - spent)
                    return cap + 1;
                spent += r;
            }
            return spent;
        }
        return solve_connected(mask, cap);
    }

    long long solve_connected(Mask mask, long long cap) {
        auto it = memo.find(mask);
        if (it != memo.end()) {
            const Entry& e = it->second;
            if (e.value <= e.cap)
                return e.value <= cap ? e.value : cap + 1;
            if (e.cap >= cap)
                return cap + 1; // optimum provably exceeds cap
        }
        if (highly_connected(mask)) {
            memo[mask] = Entry{0, std::numeric_limits<long long>::max() / 2, 0};
            return 0;
        }
        Mask rest_all = mask & (mask - 1); // everything except the lowest vertex
        int low = lowest(mask);
        std::vector<std::pair<long long, Mask>> cuts;
        for (Mask sub = rest_all;; sub = (sub - 1) & rest_all) {
            Mask side = (Mask{1} << low) | sub; // side containing the lowest vertex
            if (side != mask) {
                long long cr = crossing_count(side, mask & ~side);
                if (cr <= cap)
                    cuts.emplace_back(cr, side);
            }
            if (sub == 0)
                break;
        }
        std::sort(cuts.begin(), cuts.end());
        long long best = cap + 1;
        Mask best_side = 0;
        for (auto& [cr, side] : cuts) {
            if (cr >= best)
                break;
            long long budget = best - 1 - cr;
            long long a = solve(side, budget);
            if (a > budget)
                continue;
            long long b = solve(mask & ~side, budget - a);
            if (b > budget - a)
                continue;
            best = cr + a + b;
            best_side = side;
        }
        memo[mask] = Entry{best, cap, best_side};
        return best;
    }

    void reconstruct(Mask mask, const std::vector<int>& ids, HcdSolution& sol) {
        Mask rest = mask;
        while (rest) {
            Mask part = component_of(rest, lowest(rest));
            rest &= ~part;
            reconstruct_connected(part, ids, sol);
        }
    }

    void reconstruct_connected(Mask mask, const std::vector<int>& ids, HcdSolution& sol) {
        if (highly_connected(mask)) {
            std::vector<int> cluster;
            for (Mask m = mask; m; m &= m - 1)
                cluster.push_back(ids[lowest(m)]);
            sol.clusters.clusters.push_back(std::move(cluster));
            return;
        }
        const Entry& e = memo.at(mask);
        Mask side = e.split;
        Mask other = mask & ~side;
        for (Mask m = side; m; m &= m - 1) {
            int v = lowest(m);
            for (Mask o = adj[v] & other; o; o &= o - 1)
                sol.deleted.insert(Edge(ids[v], ids[lowest(o)]));
        }
        reconstruct(side, ids, sol);
        reconstruct(other, ids, sol);
    }
};

} // namespace

std::optional<HcdSolution> hcd_exact(const Graph& g, int k, const HcdExactOptions& opts) {
    if (k < 0)
        throw std::invalid_argument("budget must be non-negative");
    HcdSolution sol;
    long long remaining = k;
    for (const auto& comp : connected_components(g)) {
        if (is_highly_connected(g, comp)) {
            sol.clusters.clusters.push_back(comp);
            continue;
        }
        if (static_cast<int>(comp.size()) > opts.max_component)
            throw ResourceCapError("component exceeds the exact-solver size cap (" +
                                     std::to_string(opts.max_component) + " vertices)");
        std::vector<int> ids;
        Graph h = g.induced(comp, &ids);
        long long ub = hs_cluster(h, TieBreak{}).cost;
        ComponentSolver solver(h);
        Mask full = comp.size() == 64 ? ~Mask{0} : (Mask{1} << comp.size()) - 1;
        long long cap = std::min<long long>(remaining, ub);
        long long cost = solver.solve(full, cap);
        if (cost > cap)
            return std::nullopt; // optimum of this component exceeds the remaining budget
        solver.reconstruct(full, ids, sol);
        remaining -= cost;
    }
    std::sort(sol.clusters.clusters.begin(), sol.clusters.clusters.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    sol.cost = static_cast<int>(sol.deleted.size());
    return sol;
}

AdversarialInstance gen_adversarial(int n) {
    if (n < 2)
        throw std::invalid_argument("adversarial instance needs n >= 2");
    AdversarialInstance inst;
    inst.n = n;
    inst.graph = Graph(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            inst.graph.add_edge(i, j);
            inst.graph.add_edge(n + i, n + j);
        }
    for (int i = 1; i < n; ++i)
        inst.graph.add_edge(i, n + i);
    return inst;
}

} // namespace gmod
