#include "gmod/anonymity.hpp"

#include "gmod/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

namespace gmod {

namespace {

// Vertex ids sorted by descending degree, ties by ascending id.
std::vector<int> descending_order(const std::vector<int>& degrees) {
    std::vector<int> order(degrees.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (degrees[a] != degrees[b])
            return degrees[a] > degrees[b];
        return a < b;
    });
    return order;
}

void check_ell(const DegreeSequence& d, int ell) {
    int n = static_cast<int>(d.degrees.size());
    if (ell < 1 || ell > n)
        throw std::invalid_argument("ell must satisfy 1 <= ell <= n");
}

} // namespace

int DegreeSequence::delta_max() const {
    return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
}

DegreeSequence DegreeSequence::of(const Graph& g) {
    return DegreeSequence{g.degrees()};
}

bool is_l_anonymous_sequence(const std::vector<int>& degrees, int ell) {
    if (ell < 1)
        throw std::invalid_argument("ell must be positive");
    std::map<int, int> mult;
    for (int d : degrees)
        ++mult[d];
    for (auto& [value, count] : mult)
        if (count < ell)
            return false;
    return true;
}

bool is_l_anonymous(const Graph& g, int ell) {
    return is_l_anonymous_sequence(g.degrees(), ell);
}

AnonymizedSequence anonymize_degree_sequence(const DegreeSequence& d, int ell) {
    check_ell(d, ell);
    int n = static_cast<int>(d.degrees.size());
    std::vector<int> order = descending_order(d.degrees);
    std::vector<long long> prefix(n + 1, 0);
    for (int i = 0; i < n; ++i)
        prefix[i + 1] = prefix[i] + d.degrees[order[i]];

    const long long inf = std::numeric_limits<long long>::max() / 2;
    std::vector<long long> dp(n + 1, inf);
    std::vector<int> parent(n + 1, -1);
    dp[0] = 0;
    for (int i = ell; i <= n; ++i) {
        for (int len = ell; len <= 2 * ell - 1 && len <= i; ++len) {
            int j = i - len;
            if (dp[j] == inf)
                continue;
            // block j..i-1 raised to its maximum entry d[order[j]]
            long long cost = dp[j] + static_cast<long long>(d.degrees[order[j]]) * len -
                             (prefix[i] - prefix[j]);
            if (cost < dp[i]) {
                dp[i] = cost;
                parent[i] = j;
            }
        }
    }

    if (dp[n] >= inf)
        throw std::logic_error("no block grouping found"); // cannot happen for 1 <= ell <= n
    AnonymizedSequence out;
    out.targets.degrees.assign(n, 0);
    out.cost = static_cast<int>(dp[n]);
    for (int i = n; i > 0; i = parent[i]) {
        int j = parent[i];
        int target = d.degrees[order[j]];
        for (int p = j; p < i; ++p)
            out.targets.degrees[order[p]] = target;
    }
    return out;
}

std::optional<AnonymizedSequence> anonymize_degree_sequence_at_least(const DegreeSequence& d,
                                                                     int ell, int floor) {
    check_ell(d, ell);
    int n = static_cast<int>(d.degrees.size());
    std::vector<int> order = descending_order(d.degrees);
    std::vector<long long> prefix(n + 1, 0);
    for (int i = 0; i < n; ++i)
        prefix[i + 1] = prefix[i] + d.degrees[order[i]];

    long long cost_max = static_cast<long long>(n) * (n - 1) - prefix[n];
    if (floor > cost_max)
        return std::nullopt;

    int cmax = static_cast<int>(cost_max);
    // reach[i][c]: the first i sorted entries admit a grouping of cost c
    std::vector<std::vector<char>> reach(n + 1, std::vector<char>(cmax + 1, 0));
    std::vector<std::vector<std::pair<int, int>>> parent(
        n + 1, std::vector<std::pair<int, int>>(cmax + 1, {-1, -1}));
    reach[0][0] = 1;
    for (int i = ell; i <= n; ++i) {
        for (int len = ell; len <= 2 * ell - 1 && len <= i; ++len) {
            int j = i - len;
            long long block_sum = prefix[i] - prefix[j];
            for (int target = d.degrees[order[j]]; target <= n - 1; ++target) {
                long long add = static_cast<long long>(target) * len - block_sum;
                if (add > cmax)
                    break;
                for (int c = 0; c + add <= cmax; ++c) {
                    if (!reach[j][c] || reach[i][c + add])
                        continue;
                    reach[i][c + add] = 1;
                    parent[i][c + add] = {j, target};
                }
            }
        }
    }
    for (int c = std::max(floor, 0); c <= cmax; ++c) {
        if (!reach[n][c])
            continue;
        AnonymizedSequence out;
        out.targets.degrees.assign(n, 0);
        out.cost = c;
        int i = n, cc = c;
        while (i > 0) {
            auto [j, target] = parent[i][cc];
            long long add = static_cast<long long>(target) * (i - j) - (prefix[i] - prefix[j]);
            for (int p = j; p < i; ++p)
                out.targets.degrees[order[p]] = target;
            cc -= static_cast<int>(add);
            i = j;
        }
        return out;
    }
    return std::nullopt;
}

int IncrementPlan::total() const {
    return std::accumulate(increment.begin(), increment.end(), 0);
}

namespace {

bool adjacent_or_inserted(const Graph& g, const EdgeSet& inserted, int u, int v) {
    return g.has_edge(u, v) || inserted.count(Edge(u, v)) > 0;
}

// Highest residual demand, ties by lowest id; -1 when all demands are met.
int pick_max_demand(const std::vector<int>& residual) {
    int best = -1;
    for (int v = 0; v < static_cast<int>(residual.size()); ++v)
        if (residual[v] > 0 && (best == -1 || residual[v] > residual[best]))
            best = v;
    return best;
}

bool greedy_pairing(const Graph& g, std::vector<int>& residual, EdgeSet& inserted) {
    for (;;) {
        int u = pick_max_demand(residual);
        if (u == -1)
            return true;
        int partner = -1;
        for (int v = 0; v < static_cast<int>(residual.size()); ++v) {
            if (v == u || residual[v] <= 0 || adjacent_or_inserted(g, inserted, u, v))
                continue;
            if (partner == -1 || residual[v] > residual[partner])
                partner = v;
        }
        if (partner == -1)
            return false; // stall: the top demand has no insertable partner
        inserted.insert(Edge(u, partner));
        --residual[u];
        --residual[partner];
    }
}

} // namespace

std::optional<EdgeSet> realize_increments(const Graph& g, const IncrementPlan& plan) {
    int n = g.num_vertices();
    if (static_cast<int>(plan.increment.size()) != n)
        return std::nullopt;
    long long total = 0;
    for (int v = 0; v < n; ++v) {
        if (plan.increment[v] < 0 || g.degree(v) + plan.increment[v] > n - 1)
            return std::nullopt;
        total += plan.increment[v];
    }
    if (total % 2 != 0)
        return std::nullopt;
    std::vector<int> residual = plan.increment;
    EdgeSet inserted;
    if (!greedy_pairing(g, residual, inserted))
        return std::nullopt;
    return inserted;
}

namespace {

// Relaxation pass: after the strict greedy stalls, remaining demands may be
// connected to zero-demand vertices as well.
std::optional<EdgeSet> realize_relaxed(const Graph& g, const IncrementPlan& plan) {
    int n = g.num_vertices();
    std::vector<int> residual = plan.increment;
    EdgeSet inserted;
    greedy_pairing(g, residual, inserted);
    for (;;) {
        int u = pick_max_demand(residual);
        if (u == -1)
            return inserted;
        int partner = -1;
        for (int v = 0; v < n && partner == -1; ++v)
            if (v != u && !adjacent_or_inserted(g, inserted, u, v))
                partner = v;
        if (partner == -1)
            return std::nullopt;
        inserted.insert(Edge(u, partner));
        --residual[u];
        if (residual[partner] > 0)
            --residual[partner];
    }
}

} // namespace

namespace {

// Target assignments compatible with the DP's target multiset: vertices of
// equal degree are interchangeable, so within every equal-degree class the
// class's targets may be distributed among its members in any way. Visits
// assignments in lexicographic order (the canonical one first), at most
// `cap` of them.
bool for_each_assignment(const std::vector<int>& degrees, const std::vector<int>& canonical,
                         int cap, const std::function<bool(const std::vector<int>&)>& try_plan) {
    int n = static_cast<int>(degrees.size());
    std::vector<int> order = descending_order(degrees);
    std::vector<std::pair<int, int>> classes; // [begin, end) positions of equal degree
    for (int p = 0; p < n;) {
        int q = p;
        while (q < n && degrees[order[q]] == degrees[order[p]])
            ++q;
        classes.emplace_back(p, q);
        p = q;
    }
    std::vector<std::vector<int>> class_targets;
    for (auto [b, e] : classes) {
        std::vector<int> t;
        for (int p = b; p < e; ++p)
            t.push_back(canonical[order[p]]);
        std::sort(t.rbegin(), t.rend()); // lexicographically first multiset permutation
        class_targets.push_back(std::move(t));
    }
    int tried = 0;
    std::function<bool(std::size_t, std::vector<int>&)> rec = [&](std::size_t ci,
                                                                  std::vector<int>& tgt) {
        if (tried >= cap)
            return false;
        if (ci == classes.size()) {
            ++tried;
            return try_plan(tgt);
        }
        auto [b, e] = classes[ci];
        std::vector<int> perm = class_targets[ci];
        do {
            bool ok = true;
            for (int p = b; p < e && ok; ++p)
                ok = perm[p - b] >= degrees[order[p]];
            if (!ok)
                continue;
            for (int p = b; p < e; ++p)
                tgt[order[p]] = perm[p - b];
            if (rec(ci + 1, tgt))
                return true;
            if (tried >= cap)
                return false;
        } while (std::prev_permutation(perm.begin(), perm.end()));
        return false;
    };
    std::vector<int> tgt(n, 0);
    return rec(0, tgt);
}

} // namespace

EditSet lt_heuristic(const Graph& g, int ell) {
    DegreeSequence d = DegreeSequence::of(g);
    check_ell(d, ell);
    int n = g.num_vertices();
    int floor = 0;
    for (;;) {
        std::optional<AnonymizedSequence> seq =
            floor == 0 ? std::optional<AnonymizedSequence>(anonymize_degree_sequence(d, ell))
                       : anonymize_degree_sequence_at_least(d, ell, floor);
        if (!seq)
            throw std::logic_error("anonymization retry ran out of groupings");
        if (seq->cost % 2 == 0) {
            std::optional<EdgeSet> edges;
            for_each_assignment(d.degrees, seq->targets.degrees, 256,
                                [&](const std::vector<int>& targets) {
                                    IncrementPlan plan;
                                    plan.increment.resize(n);
                                    for (int v = 0; v < n; ++v)
                                        plan.increment[v] = targets[v] - d.degrees[v];
                                    edges = realize_increments(g, plan);
                                    return edges.has_value();
                                });
            if (edges)
                return EditSet{{}, *edges};
            IncrementPlan plan;
            plan.increment.resize(n);
            for (int v = 0; v < n; ++v)
                plan.increment[v] = seq->targets.degrees[v] - d.degrees[v];
            if (auto relaxed = realize_relaxed(g, plan)) {
                if (is_l_anonymous(add_edges(g, *relaxed), ell))
                    return EditSet{{}, *relaxed};
            }
        }
        floor = seq->cost + 1;
    }
}

std::optional<EditSet> anon_exact(const Graph& g, int ell, int k, const AnonExactOptions& opts) {
    if (k < 0)
        throw std::invalid_argument("budget must be non-negative");
    if (ell < 1 || ell > g.num_vertices())
        throw std::invalid_argument("ell must satisfy 1 <= ell <= n");
    std::vector<Edge> candidates = g.non_edges();
    long long ne = static_cast<long long>(candidates.size());
    long long combos = 0, binom = 1;
    for (int t = 0; t <= k && t <= ne; ++t) {
        combos += binom;
        if (combos > opts.max_combinations || binom > opts.max_combinations)
            throw ResourceCapError("instance too large for exhaustive anonymization");
        binom = binom * (ne - t) / (t + 1);
    }

    std::vector<int> base = g.degrees();
    std::vector<int> pick;
    std::vector<int> degs;
    // subsets of non-edges in increasing size, lexicographic within a size
    for (int t = 0; t <= std::min<long long>(k, ne); ++t) {
        pick.assign(t, 0);
        std::function<std::optional<EditSet>(int, int)> rec =
            [&](int idx, int from) -> std::optional<EditSet> {
            if (idx == t) {
                degs = base;
                for (int i = 0; i < t; ++i) {
                    degs[candidates[pick[i]].u]++;
                    degs[candidates[pick[i]].v]++;
                }
                if (!is_l_anonymous_sequence(degs, ell))
                    return std::nullopt;
                EditSet out;
                for (int i = 0; i < t; ++i)
                    out.insertions.insert(candidates[pick[i]]);
                return out;
            }
            for (int c = from; c < static_cast<int>(candidates.size()); ++c) {
                pick[idx] = c;
                if (auto r = rec(idx + 1, c + 1))
                    return r;
            }
            return std::nullopt;
        };
        if (auto r = rec(0, 0))
            return r;
    }
    return std::nullopt;
}

bool win_win_certificate(int delta, long long lower_bound) {
    long long d = delta;
    return lower_bound > 2 * d * d * d * d;
}

long long anon_insertion_lower_bound(const Graph& g, int ell) {
    auto seq = anonymize_degree_sequence(DegreeSequence::of(g), ell);
    return (seq.cost + 1) / 2;
}

} // namespace gmod
