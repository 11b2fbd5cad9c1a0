#include "gmod/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace gmod {

void BipartiteGraph::add_edge(int l, int r) {
    if (l < 0 || l >= num_left() || r < 0 || r >= nr_)
        throw std::out_of_range("bipartite endpoint out of range");
    auto& nl = adj_[l];
    auto it = std::lower_bound(nl.begin(), nl.end(), r);
    if (it == nl.end() || *it != r)
        nl.insert(it, r);
}

namespace {

bool try_kuhn(const std::vector<std::vector<int>>& adj, int l, std::vector<bool>& used,
              std::vector<int>& match_right) {
    for (int r : adj[l]) {
        if (used[r])
            continue;
        used[r] = true;
        if (match_right[r] == -1 || try_kuhn(adj, match_right[r], used, match_right)) {
            match_right[r] = l;
            return true;
        }
    }
    return false;
}

} // namespace

BipartiteGraph::Matching BipartiteGraph::max_matching() const {
    Matching m;
    m.match_left.assign(num_left(), -1);
    m.match_right.assign(nr_, -1);
    std::vector<bool> used(nr_);
    for (int l = 0; l < num_left(); ++l) {
        std::fill(used.begin(), used.end(), false);
        if (try_kuhn(adj_, l, used, m.match_right))
            ++m.size;
    }
    for (int r = 0; r < nr_; ++r)
        if (m.match_right[r] != -1)
            m.match_left[m.match_right[r]] = r;
    return m;
}

BipartiteGraph::Cover BipartiteGraph::min_vertex_cover(const Matching& m) const {
    std::vector<bool> zl(num_left(), false), zr(nr_, false);
    std::vector<int> stack;
    for (int l = 0; l < num_left(); ++l)
        if (m.match_left[l] == -1) {
            zl[l] = true;
            stack.push_back(l);
        }
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        for (int r : adj_[l]) {
            if (zr[r] || m.match_left[l] == r)
                continue;
            zr[r] = true;
            int l2 = m.match_right[r];
            if (l2 != -1 && !zl[l2]) {
                zl[l2] = true;
                stack.push_back(l2);
            }
        }
    }
    Cover c;
    c.left_in.resize(num_left());
    c.right_in.resize(nr_);
    for (int l = 0; l < num_left(); ++l)
        c.left_in[l] = !zl[l];
    for (int r = 0; r < nr_; ++r)
        c.right_in[r] = zr[r];
    return c;
}

EdgeSet max_bipartite_matching(const std::vector<int>& left, const std::vector<int>& right,
                               const EdgeSet& edges) {
    std::unordered_map<int, int> lpos, rpos;
    for (int i = 0; i < static_cast<int>(left.size()); ++i)
        lpos[left[i]] = i;
    for (int i = 0; i < static_cast<int>(right.size()); ++i)
        rpos[right[i]] = i;
    BipartiteGraph b(static_cast<int>(left.size()), static_cast<int>(right.size()));
    for (const Edge& e : edges) {
        auto lu = lpos.find(e.u), rv = rpos.find(e.v);
        if (lu != lpos.end() && rv != rpos.end()) {
            b.add_edge(lu->second, rv->second);
            continue;
        }
        auto lv = lpos.find(e.v), ru = rpos.find(e.u);
        if (lv != lpos.end() && ru != rpos.end()) {
            b.add_edge(lv->second, ru->second);
            continue;
        }
        throw std::invalid_argument("edge does not cross between the two sides");
    }
    auto m = b.max_matching();
    EdgeSet out;
    for (int l = 0; l < static_cast<int>(left.size()); ++l)
        if (m.match_left[l] != -1)
            out.insert(Edge(left[l], right[m.match_left[l]]));
    return out;
}

} // namespace gmod
