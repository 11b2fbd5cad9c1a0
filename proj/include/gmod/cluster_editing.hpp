#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "gmod/graph.hpp"

namespace gmod {

enum class CeLowerBound { none, p3_packing };
enum class CeReduction { none, critical_clique };
enum class CeBranchOrder { min_id, max_conflict };

// The tunable choice points of the solver. Configurations never change the
// reported optimum, only the amount of work to reach it.
struct CeConfig {
    CeLowerBound lower_bound = CeLowerBound::p3_packing;
    CeReduction reduction = CeReduction::critical_clique;
    int reduction_period = 1; // apply the reduction at depths divisible by this
    CeBranchOrder branch_order = CeBranchOrder::min_id;
    std::uint64_t seed = 0;

    bool operator==(const CeConfig&) const = default;
};

// Induced path u-v-w: edges {u,v},{v,w} present, {u,w} absent. A graph is a
// disjoint union of cliques iff it has none.
struct ConflictTriple {
    int u = 0, v = 0, w = 0;
};

std::optional<ConflictTriple> find_conflict_triple(const Graph& g, CeBranchOrder order);

// Lower bound on the optimal edit cost; p3_packing greedily packs conflict
// triples that are disjoint on all three vertex pairs (sharing even the
// non-edge would let one insertion resolve two triples).
int ce_lower_bound(const Graph& g, const CeConfig& cfg);

// Integer-weighted instance produced by merging: weight > 0 is an edge block
// whose deletion costs that much, weight < 0 a non-edge block whose
// insertion costs the absolute value.
struct WeightedCeInstance {
    std::vector<std::vector<long long>> weight; // symmetric, zero diagonal
    std::vector<std::vector<int>> members;      // original vertices per super-vertex

    int size() const { return static_cast<int>(weight.size()); }
    static WeightedCeInstance from_graph(const Graph& g);
};

struct CeReduceResult {
    WeightedCeInstance reduced;
    EditSet forced;
    int residual_budget = 0;
    bool infeasible = false;
};
// Merges every class of adjacent vertices with identical closed
// neighborhoods (critical cliques) into one super-vertex; optimum-preserving
// with integer weights on the reduced instance.
CeReduceResult ce_reduce(const Graph& g, int budget);

struct CeSolveStats {
    long long nodes = 0;
    bool timed_out = false;
};

// Minimum edit set of size <= k turning g into a disjoint union of cliques,
// or nullopt. Branches three ways on a conflict triple (delete either edge,
// insert the chord); branch decisions are locked via +-(k+1) weights, the
// reduction runs at depths divisible by reduction_period, and subtrees are
// pruned against the configured lower bound.
std::optional<EditSet> ce_solve(
    const Graph& g, int k, const CeConfig& cfg, CeSolveStats* stats = nullptr,
    std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

} // namespace gmod
