#pragma once

#include <optional>

#include "gmod/graph.hpp"

namespace gmod {

// A graph that is properly list-colored everywhere except `target`, plus a
// budget of how many old colors may change while coloring the target.
struct ListColoringInstance {
    Graph graph;
    std::vector<std::vector<int>> lists; // admissible colors per vertex, ascending
    std::vector<int> coloring;           // -1 exactly at target
    int target = 0;
    int budget = 0; // recolored vertices allowed; the target itself is free

    int max_list_size() const;
    void validate() const; // throws std::invalid_argument on broken invariants
};

struct IlcResult {
    std::optional<std::vector<int>> coloring;
    long long nodes = 0; // vertex expansions; bounded by sum_{i<=budget} k^i
};

// Branching search: commit the target to each list color; every conflict
// then pairs a committed vertex with an old one, which must be recolored,
// consuming budget. Complete for the k^c-bounded neighborhood.
IlcResult ilc_solve(const ListColoringInstance& inst);

struct ColoringRun {
    std::optional<std::vector<int>> coloring;
    long long nodes = 0;
    long long node_bound = 0; // sum over insertions of sum_{i<=c} k^i
};

// Insert vertices in descending-degree order (ties by id), coloring each new
// vertex with a per-step recoloring budget. With budget 0 this is exactly
// the greedy coloring. `global_budget` shares one budget across all steps.
ColoringRun ilc_color_graph(const Graph& g, const std::vector<std::vector<int>>& lists,
                            int step_budget, bool global_budget = false);

std::optional<std::vector<int>> greedy_color(const Graph& g,
                                             const std::vector<std::vector<int>>& lists);

// Number of distinct colors used.
int color_count(const std::vector<int>& coloring);

} // namespace gmod
