#pragma once

#include <vector>

#include "gmod/graph.hpp"

namespace gmod {

// Bipartite graph over explicit index spaces [0,nl) and [0,nr).
class BipartiteGraph {
public:
    BipartiteGraph(int nl, int nr) : adj_(nl), nr_(nr) {}

    void add_edge(int l, int r);
    int num_left() const { return static_cast<int>(adj_.size()); }
    int num_right() const { return nr_; }
    const std::vector<int>& left_neighbors(int l) const { return adj_[l]; }

    struct Matching {
        std::vector<int> match_left;  // left -> matched right or -1
        std::vector<int> match_right; // right -> matched left or -1
        int size = 0;
    };
    // Kuhn augmenting paths, deterministic (ascending scan order).
    Matching max_matching() const;

    struct Cover {
        std::vector<bool> left_in;
        std::vector<bool> right_in;
    };
    // Koenig minimum vertex cover from a maximum matching: alternating
    // reachability from the unmatched left vertices, cover = (L \ Z) u (R n Z).
    Cover min_vertex_cover(const Matching& m) const;

private:
    std::vector<std::vector<int>> adj_;
    int nr_;
};

// Maximum-cardinality matching between two disjoint id sets. Every edge must
// have exactly one endpoint on each side.
EdgeSet max_bipartite_matching(const std::vector<int>& left, const std::vector<int>& right,
                               const EdgeSet& edges);

} // namespace gmod
