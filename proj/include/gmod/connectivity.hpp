#pragma once

#include <cstdint>
#include <vector>

#include "gmod/graph.hpp"

namespace gmod {

// Selection rule among equally small cuts. `lexicographic` is the canonical
// deterministic choice, `adversarial` prefers cuts that peel off the single
// lowest-id vertex whenever such a cut is minimum, `random` draws a seeded
// choice among the candidate minimum cuts.
struct TieBreak {
    enum class Kind { lexicographic, adversarial, random };
    Kind kind = Kind::lexicographic;
    std::uint64_t seed = 0;
};

// Two-sided split of a connected component. `crossing` is exactly the set
// of edges with one endpoint per side; side_a holds the smaller minimum id.
struct Cut {
    std::vector<int> side_a;
    std::vector<int> side_b;
    EdgeSet crossing;
};

std::vector<std::vector<int>> connected_components(const Graph& g);
// Components of the subgraph induced by `within` (original ids).
std::vector<std::vector<int>> connected_components(const Graph& g, const std::vector<int>& within);

// Lambda of the induced subgraph; 0 for a single vertex by convention.
// Node-merging (maximum adjacency order) global min-cut for sizes >= 3.
int edge_connectivity(const Graph& g, const std::vector<int>& component);

// True iff edge connectivity exceeds half the vertex count. Singletons are
// highly connected by convention, two-vertex components are not.
bool is_highly_connected(const Graph& g, const std::vector<int>& component);

// A minimum cut of a connected component with >= 2 vertices, selected
// according to `policy`. Throws std::invalid_argument on components that
// are too small or not connected.
Cut min_cut(const Graph& g, const std::vector<int>& component, const TieBreak& policy = {});

// All edges of g with one endpoint in `side` and the other outside of it
// but inside `component`.
EdgeSet crossing_edges(const Graph& g, const std::vector<int>& side, const std::vector<int>& component);

} // namespace gmod
