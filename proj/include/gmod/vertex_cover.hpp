#pragma once

#include <optional>

#include "gmod/graph.hpp"

namespace gmod {

// Optimal solution of the covering LP in half-integral form; values are
// stored doubled so everything stays integral.
struct HalfIntegralAssignment {
    std::vector<int> twice_value; // per vertex, in {0, 1, 2}
    int lp_twice = 0;             // twice the LP optimum

    bool feasible_for(const Graph& g) const;
};

// LP optimum via maximum matching on the bipartite double cover: each vertex
// splits into a left and a right copy, each edge {u,v} into L_u-R_v and
// L_v-R_u. A Koenig cover of the double cover halves into an optimal
// half-integral assignment; the alternating-reachability labeling maximizes
// the number of 0/1 entries.
HalfIntegralAssignment lp_half_integral(const Graph& g);

struct NtReduction {
    std::vector<int> forced_in;  // value-1 vertices, in every optimal cover
    std::vector<int> forced_out; // value-0 vertices, never needed
    Graph residual;              // induced subgraph on the value-1/2 vertices
    std::vector<int> residual_ids;
};
// optimal(g) = |forced_in| + optimal(residual).
NtReduction nt_reduce(const Graph& g, const HalfIntegralAssignment& a);

bool is_vertex_cover(const Graph& g, const std::vector<int>& cover);

// A cover of size <= k, or nullopt. Reduce, then branch on a max-degree
// half-valued vertex (take its neighborhood / take the vertex), recomputing
// the LP bound at every node and pruning when it exceeds the budget.
std::optional<std::vector<int>> vc_above_lp(const Graph& g, int k);

// Strictly smaller cover within exchange distance k, or nullopt when the
// k-exchange neighborhood holds no improvement. Exhaustive over removal
// subsets R of the cover with the forced additions N(R) \ S; exponential in
// k by design. Throws std::invalid_argument when `cover` is not a cover.
std::optional<std::vector<int>> ls_vertex_cover(const Graph& g, const std::vector<int>& cover,
                                                int k);

} // namespace gmod
