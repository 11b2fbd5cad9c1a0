#pragma once

#include <optional>

#include "gmod/graph.hpp"
#include "gmod/list_coloring.hpp"
#include "gmod/tournament.hpp"

// Exhaustive reference implementations, deliberately independent of the
// solver code paths. Desk-scale only.
namespace gmod::brute {

// Smallest crossing over all 2-partitions of the component.
int min_cut_size(const Graph& g, const std::vector<int>& component);

// Optimal deletion cost over all partitions of V into connected, highly
// connected parts.
int hcd_opt(const Graph& g);

// Smallest edge subset (increasing size, <= k) whose removal leaves only
// highly connected components.
std::optional<EdgeSet> hcd_edge_subset_search(const Graph& g, int k);

// Minimum total raise over all consecutive block partitions (block size
// >= ell) of the descending-sorted sequence, each block raised to its max.
int anon_grouping_opt(const std::vector<int>& degrees, int ell);

// Minimum vertex cover size via subset enumeration.
int vc_opt(const Graph& g);

// Twice the covering LP optimum via enumeration of half-integral points.
int lp_opt_twice(const Graph& g);

// Minimum deletion set size via arc-subset enumeration.
int fas_opt(const Tournament& t);

// Minimum edit cost to a disjoint union of cliques via partition enumeration.
int ce_opt(const Graph& g);

// Any proper list coloring of the whole instance that differs from the old
// coloring on at most `budget` non-target vertices, via full enumeration.
std::optional<std::vector<int>> ilc_search(const ListColoringInstance& inst);

} // namespace gmod::brute
