#include "gmod/vertex_cover.hpp"

#include <algorithm>
#include <functional>

#include "gmod/matching.hpp"

namespace gmod {

bool HalfIntegralAssignment::feasible_for(const Graph& g) const {
    if (static_cast<int>(twice_value.size()) != g.num_vertices())
        return false;
    for (int v : twice_value)
        if (v != 0 && v != 1 && v != 2)
            return false;
    for (const Edge& e : g.edges())
        if (twice_value[e.u] + twice_value[e.v] < 2)
            return false;
    return true;
}

HalfIntegralAssignment lp_half_integral(const Graph& g) {
    int n = g.num_vertices();
    BipartiteGraph cover_graph(n, n);
    for (const Edge& e : g.edges()) {
        cover_graph.add_edge(e.u, e.v);
        cover_graph.add_edge(e.v, e.u);
    }
    auto matching = cover_graph.max_matching();
    auto cover = cover_graph.min_vertex_cover(matching);
    HalfIntegralAssignment a;
    a.twice_value.resize(n);
    for (int v = 0; v < n; ++v) {
        a.twice_value[v] = (cover.left_in[v] ? 1 : 0) + (cover.right_in[v] ? 1 : 0);
        a.lp_twice += a.twice_value[v];
    }
    return a;
}

NtReduction nt_reduce(const Graph& g, const HalfIntegralAssignment& a) {
    if (static_cast<int>(a.twice_value.size()) != g.num_vertices())
        throw std::invalid_argument("assignment does not match graph");
    NtReduction red;
    std::vector<int> halves;
    for (int v = 0; v < g.num_vertices(); ++v) {
        switch (a.twice_value[v]) {
        case 2: red.forced_in.push_back(v); break;
        case 0: red.forced_out.push_back(v); break;
        default: halves.push_back(v); break;
        }
    }
    red.residual = g.induced(halves, &red.residual_ids);
    return red;
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& cover) {
    std::vector<char> in(g.num_vertices(), 0);
    for (int v : cover) {
        if (v < 0 || v >= g.num_vertices())
            return false;
        in[v] = 1;
    }
    for (const Edge& e : g.edges())
        if (!in[e.u] && !in[e.v])
            return false;
    return true;
}

namespace {

// `ids` maps the working graph's vertices back to the original ones.
bool vc_branch(const Graph& h, const std::vector<int>& ids, int k, std::vector<int>& cover) {
    auto lp = lp_half_integral(h);
    if (lp.lp_twice > 2 * k)
        return false;
    auto red = nt_reduce(h, lp);
    int budget = k - static_cast<int>(red.forced_in.size());
    if (budget < 0)
        return false;
    for (int v : red.forced_in)
        cover.push_back(ids[v]);
    const Graph& r = red.residual;
    if (r.num_edges() == 0)
        return true;

    std::vector<int> rids(red.residual_ids.size());
    for (std::size_t i = 0; i < red.residual_ids.size(); ++i)
        rids[i] = ids[red.residual_ids[i]];

    int pick = 0;
    for (int v = 1; v < r.num_vertices(); ++v)
        if (r.degree(v) > r.degree(pick))
            pick = v;

    std::size_t mark = cover.size();
    // Take the whole neighborhood first: the stronger commitment.
    {
        std::vector<int> nb = r.neighbors(pick);
        if (static_cast<int>(nb.size()) <= budget) {
            std::vector<int> keep;
            for (int v = 0; v < r.num_vertices(); ++v)
                if (v != pick && !std::binary_search(nb.begin(), nb.end(), v))
                    keep.push_back(v);
            std::vector<int> sub_ids_local;
            Graph sub = r.induced(keep, &sub_ids_local);
            std::vector<int> sub_ids(sub_ids_local.size());
            for (std::size_t i = 0; i < sub_ids_local.size(); ++i)
                sub_ids[i] = rids[sub_ids_local[i]];
            for (int v : nb)
                cover.push_back(rids[v]);
            if (vc_branch(sub, sub_ids, budget - static_cast<int>(nb.size()), cover))
                return true;
            cover.resize(mark);
        }
    }
    // Then take the vertex itself.
    if (budget >= 1) {
        std::vector<int> keep;
        for (int v = 0; v < r.num_vertices(); ++v)
            if (v != pick)
                keep.push_back(v);
        std::vector<int> sub_ids_local;
        Graph sub = r.induced(keep, &sub_ids_local);
        std::vector<int> sub_ids(sub_ids_local.size());
        for (std::size_t i = 0; i < sub_ids_local.size(); ++i)
            sub_ids[i] = rids[sub_ids_local[i]];
        cover.push_back(rids[pick]);
        if (vc_branch(sub, sub_ids, budget - 1, cover))
            return true;
        cover.resize(mark);
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> vc_above_lp(const Graph& g, int k) {
    if (k < 0)
        throw std::invalid_argument("budget must be non-negative");
    std::vector<int> ids(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        ids[v] = v;
    std::vector<int> cover;
    if (!vc_branch(g, ids, k, cover))
        return std::nullopt;
    std::sort(cover.begin(), cover.end());
    return cover;
}

std::optional<std::vector<int>> ls_vertex_cover(const Graph& g, const std::vector<int>& cover,
                                                int k) {
    if (!is_vertex_cover(g, cover))
        throw std::invalid_argument("input is not a vertex cover");
    if (k < 0)
        throw std::invalid_argument("exchange distance must be non-negative");
    std::vector<int> s(cover);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<char> in_s(g.num_vertices(), 0);
    for (int v : s)
        in_s[v] = 1;

    int sz = static_cast<int>(s.size());
    std::vector<int> idx;
    std::optional<std::vector<int>> result;
    // removal sets in increasing size, lexicographic within a size
    std::function<bool(int, int, int)> rec = [&](int want, int pos, int from) -> bool {
        if (pos == want) {
            // edges inside the removed set can never be re-covered
            for (int i = 0; i < want; ++i)
                for (int j = i + 1; j < want; ++j)
                    if (g.has_edge(s[idx[i]], s[idx[j]]))
                        return false;
            std::vector<char> removed(g.num_vertices(), 0);
            for (int i = 0; i < want; ++i)
                removed[s[idx[i]]] = 1;
            std::vector<int> additions;
            for (int i = 0; i < want; ++i)
                for (int w : g.neighbors(s[idx[i]]))
                    if (!in_s[w])
                        additions.push_back(w);
            std::sort(additions.begin(), additions.end());
            additions.erase(std::unique(additions.begin(), additions.end()), additions.end());
            int add = static_cast<int>(additions.size());
            if (add >= want || want + add > k)
                return false;
            std::vector<int> next;
            for (int v : s)
                if (!removed[v])
                    next.push_back(v);
            next.insert(next.end(), additions.begin(), additions.end());
            std::sort(next.begin(), next.end());
            result = std::move(next);
            return true;
        }
        for (int c = from; c < sz; ++c) {
            idx[pos] = c;
            if (rec(want, pos + 1, c + 1))
                return true;
        }
        return false;
    };
    for (int want = 1; want <= std::min(k, sz); ++want) {
        idx.assign(want, 0);
        if (rec(want, 0, 0))
            return result;
    }
    return std::nullopt;
}

} // namespace gmod
