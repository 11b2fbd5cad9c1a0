#pragma once

#include <optional>

#include "gmod/connectivity.hpp"
#include "gmod/graph.hpp"

namespace gmod {

struct HcdSolution {
    EdgeSet deleted;
    Partition clusters;
    int cost = 0;
};

// Split components along minimum cuts until every component is highly
// connected. The tie-break policy decides which minimum cut is removed;
// lexicographic runs are fully deterministic. Sides of a cut are processed
// smallest-side-first.
HcdSolution hs_cluster(const Graph& g, const TieBreak& policy = {});

struct HcdReduction {
    Graph reduced;
    std::vector<int> reduced_ids;          // reduced vertex -> original id
    std::vector<std::vector<int>> settled; // components that are already highly connected
    EdgeSet forced_deletions;
    int residual_k = 0;
    bool infeasible = false;
};
// R1: components that are already highly connected become zero-cost
// clusters. R2: a component that is not highly connected and whose cheapest
// cut exceeds the budget makes the instance infeasible.
HcdReduction hcd_reduce(const Graph& g, int k);

// Sum of minimum cut sizes over components that are not highly connected;
// never exceeds the optimal deletion cost.
int hcd_lower_bound(const Graph& g);

struct HcdExactOptions {
    int max_component = 20; // refuse exact solving above this component size
};
// Minimum-cost solution of size <= k, or nullopt. Recursive cut branching:
// a component that is not highly connected must be split along some cut, so
// cuts are enumerated in increasing size and both sides solved recursively,
// memoized per vertex subset and pruned with hcd_lower_bound and the
// hs_cluster upper bound.
std::optional<HcdSolution> hcd_exact(const Graph& g, int k, const HcdExactOptions& opts = {});

struct AdversarialInstance {
    int n = 0;
    Graph graph; // vertices 0..n-1 and n..2n-1 form the two cliques
};
// Two n-cliques {u_1..u_n}, {v_1..v_n} plus the edges {u_i,v_i} for i >= 2.
// Optimal deletion cost is n-1 (the joining edges) for n >= 3, while greedy
// clustering with adversarial tie-breaking pays n(n+1)/2 - 1.
AdversarialInstance gen_adversarial(int n);

} // namespace gmod
