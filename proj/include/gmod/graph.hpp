#pragma once

#include <compare>
#include <set>
#include <stdexcept>
#include <vector>

namespace gmod {

// Unordered vertex pair; endpoints are normalized so that u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b)
            throw std::invalid_argument("edge endpoints must be distinct");
    }

    auto operator<=>(const Edge&) const = default;
};

using EdgeSet = std::set<Edge>;

// Simple undirected graph on dense vertex ids 0..n-1.
// Invariants: no self-loops, no parallel edges, adjacency symmetric and
// kept sorted; num_edges() equals half the degree sum.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n >= 0 ? n : throw std::invalid_argument("negative vertex count")) {}

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return m_; }

    int add_vertex();
    // Returns false (and leaves the graph unchanged) if the edge exists.
    bool add_edge(int u, int v);
    bool remove_edge(int u, int v);
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    std::vector<Edge> edges() const;
    std::vector<int> degrees() const;

    // Pairs {u,v}, u < v, not present as edges.
    std::vector<Edge> non_edges() const;

    // Induced subgraph on `vs` (original ids, any order, no duplicates).
    // Vertices are renumbered 0..|vs|-1 following the sorted order of the
    // original ids; *out_ids, when given, maps new id -> original id.
    Graph induced(const std::vector<int>& vs, std::vector<int>* out_ids = nullptr) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= num_vertices())
            throw std::out_of_range("vertex id out of range");
    }

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// Disjoint vertex clusters whose union is V; no empty cluster.
struct Partition {
    std::vector<std::vector<int>> clusters;
};

bool is_partition_of(const Partition& p, int n);

// A set of edge deletions and insertions; the two sets are disjoint in any
// valid solver output (deletions refer to present edges, insertions to
// absent pairs).
struct EditSet {
    EdgeSet deletions;
    EdgeSet insertions;

    int size() const { return static_cast<int>(deletions.size() + insertions.size()); }
    bool empty() const { return deletions.empty() && insertions.empty(); }
};

Graph remove_edges(Graph g, const EdgeSet& es);
Graph add_edges(Graph g, const EdgeSet& es);
Graph apply_edits(Graph g, const EditSet& edits);

} // namespace gmod
