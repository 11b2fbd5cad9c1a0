#include "gmod/graph.hpp"

#include <algorithm>

namespace gmod {

int Graph::add_vertex() {
    adj_.emplace_back();
    return num_vertices() - 1;
}

bool Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loops are not allowed");
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        return false;
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++m_;
    return true;
}

bool Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it == nu.end() || *it != v)
        return false;
    nu.erase(it);
    auto& nv = adj_[v];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --m_;
    return true;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        return false;
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(num_vertices());
    for (int v = 0; v < num_vertices(); ++v)
        d[v] = degree(v);
    return d;
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < num_vertices(); ++u)
        for (int v = u + 1; v < num_vertices(); ++v)
            if (!has_edge(u, v))
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<int>& vs, std::vector<int>* out_ids) const {
    std::vector<int> ids(vs);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("duplicate vertex in induced set");
    std::vector<int> pos(num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
        check_vertex(ids[i]);
        pos[ids[i]] = i;
    }
    Graph h(static_cast<int>(ids.size()));
    for (int i = 0; i < static_cast<int>(ids.size()); ++i)
        for (int w : adj_[ids[i]])
            if (pos[w] > i)
                h.add_edge(i, pos[w]);
    if (out_ids)
        *out_ids = std::move(ids);
    return h;
}

bool is_partition_of(const Partition& p, int n) {
    std::vector<bool> seen(n, false);
    int total = 0;
    for (const auto& cluster : p.clusters) {
        if (cluster.empty())
            return false;
        for (int v : cluster) {
            if (v < 0 || v >= n || seen[v])
                return false;
            seen[v] = true;
            ++total;
        }
    }
    return total == n;
}

Graph remove_edges(Graph g, const EdgeSet& es) {
    for (const Edge& e : es)
        if (!g.remove_edge(e.u, e.v))
            throw std::invalid_argument("deleted edge not present in graph");
    return g;
}

Graph add_edges(Graph g, const EdgeSet& es) {
    for (const Edge& e : es)
        if (!g.add_edge(e.u, e.v))
            throw std::invalid_argument("inserted edge already present in graph");
    return g;
}

Graph apply_edits(Graph g, const EditSet& edits) {
    return add_edges(remove_edges(std::move(g), edits.deletions), edits.insertions);
}

} // namespace gmod
