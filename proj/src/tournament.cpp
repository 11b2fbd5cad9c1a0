#include "gmod/tournament.hpp"

#include "gmod/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gmod {

Tournament::Tournament(int n) : n_(n), forward_(n, std::vector<char>(n, 0)) {
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            forward_[u][v] = 1;
}

Tournament Tournament::from_arcs(int n, const std::vector<Arc>& arcs) {
    Tournament t(n);
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    for (const Arc& a : arcs) {
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
            throw std::invalid_argument("arc endpoint out of range");
        if (seen[a.from][a.to] || seen[a.to][a.from])
            throw std::invalid_argument("pair oriented twice");
        seen[a.from][a.to] = 1;
        t.orient(a.from, a.to);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!seen[u][v] && !seen[v][u])
                throw std::invalid_argument("pair left unoriented");
    return t;
}

Tournament Tournament::random(int n, std::mt19937_64& rng) {
    Tournament t(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1)
                t.orient(v, u);
    return t;
}

bool Tournament::has_arc(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
        return false;
    return forward_[u][v] != 0;
}

void Tournament::orient(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("vertex id out of range");
    if (u == v)
        throw std::invalid_argument("arc endpoints must be distinct");
    forward_[u][v] = 1;
    forward_[v][u] = 0;
}

std::vector<Arc> Tournament::arcs() const {
    std::vector<Arc> out;
    out.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (forward_[u][v])
                out.emplace_back(u, v);
    return out;
}

bool is_acyclic_after(const Tournament& t, const ArcSet& s) {
    for (const Arc& a : s)
        if (!t.has_arc(a.from, a.to))
            throw std::invalid_argument("deleted arc not present in tournament");
    int n = t.num_vertices();
    // Kahn on the remaining arcs
    std::vector<int> indeg(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (t.has_arc(u, v) && !s.count(Arc(u, v)))
                ++indeg[v];
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0)
            queue.push_back(v);
    int done = 0;
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        ++done;
        for (int v = 0; v < n; ++v)
            if (t.has_arc(u, v) && !s.count(Arc(u, v)) && --indeg[v] == 0)
                queue.push_back(v);
    }
    return done == n;
}

ArcSet fas_exact(const Tournament& t, const FasExactOptions& opts) {
    int n = t.num_vertices();
    if (n > opts.max_vertices)
        throw ResourceCapError("tournament exceeds the exact-solver size cap (" +
                                 std::to_string(opts.max_vertices) + " vertices)");
    std::vector<int> perm(n), best_perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    best_perm = perm;
    int best = std::numeric_limits<int>::max();
    do {
        int backward = 0;
        for (int i = 0; i < n && backward < best; ++i)
            for (int j = i + 1; j < n; ++j)
                if (t.has_arc(perm[j], perm[i]))
                    ++backward;
        if (backward < best) {
            best = backward;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    ArcSet out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (t.has_arc(best_perm[j], best_perm[i]))
                out.insert(Arc(best_perm[j], best_perm[i]));
    return out;
}

std::optional<ArcSet> ls_fast(const Tournament& t, const ArcSet& s, int k) {
    if (!is_acyclic_after(t, s))
        throw std::invalid_argument("seed solution does not make the tournament acyclic");
    if (k < 0)
        throw std::invalid_argument("exchange distance must be non-negative");
    std::vector<Arc> kept(s.begin(), s.end());
    std::vector<Arc> outside;
    for (const Arc& a : t.arcs())
        if (!s.count(a))
            outside.push_back(a);

    int sz = static_cast<int>(kept.size());
    std::vector<int> ridx, aidx;
    std::optional<ArcSet> result;

    std::function<bool(const ArcSet&, int, int, int)> extend =
        [&](const ArcSet& base, int want, int pos, int from) -> bool {
        if (pos == want) {
            ArcSet candidate = base;
            for (int i = 0; i < want; ++i)
                candidate.insert(outside[aidx[i]]);
            if (is_acyclic_after(t, candidate)) {
                result = std::move(candidate);
                return true;
            }
            return false;
        }
        for (int c = from; c < static_cast<int>(outside.size()); ++c) {
            aidx[pos] = c;
            if (extend(base, want, pos + 1, c + 1))
                return true;
        }
        return false;
    };

    std::function<bool(int, int, int)> choose_removals = [&](int want, int pos, int from) -> bool {
        if (pos == want) {
            ArcSet base;
            std::vector<char> removed(sz, 0);
            for (int i = 0; i < want; ++i)
                removed[ridx[i]] = 1;
            for (int i = 0; i < sz; ++i)
                if (!removed[i])
                    base.insert(kept[i]);
            // additions in increasing count; |S'| must shrink strictly
            int max_add = std::min(k - want, want - 1);
            for (int extra = 0; extra <= max_add; ++extra) {
                aidx.assign(extra, 0);
                if (extend(base, extra, 0, 0))
                    return true;
            }
            return false;
        }
        for (int c = from; c < sz; ++c) {
            ridx[pos] = c;
            if (choose_removals(want, pos + 1, c + 1))
                return true;
        }
        return false;
    };

    for (int want = 1; want <= std::min(k, sz); ++want) {
        ridx.assign(want, 0);
        if (choose_removals(want, 0, 0))
            return result;
    }
    return std::nullopt;
}

} // namespace gmod
