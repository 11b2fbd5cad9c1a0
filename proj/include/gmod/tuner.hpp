#pragma once

#include <chrono>
#include <string>

#include "gmod/cluster_editing.hpp"
#include "gmod/graph.hpp"

namespace gmod {

struct ConfigGrid {
    std::vector<CeLowerBound> lower_bounds;
    std::vector<CeReduction> reductions;
    std::vector<int> reduction_periods;
    std::vector<CeBranchOrder> branch_orders;

    // Both bounds x both reductions x periods {1,2,4} x both orders: 24 configs.
    static ConfigGrid full();
};

// Full Cartesian product in a fixed nesting order (bounds outermost).
// Throws std::invalid_argument when any dimension is empty.
std::vector<CeConfig> enumerate_configs(const ConfigGrid& grid, std::uint64_t seed = 0);

struct TuneInstance {
    std::string id;
    Graph graph;
};

struct TuneRun {
    int config_index = 0;
    std::string instance_id;
    long long nodes = 0;
    bool timed_out = false;
    int opt_cost = -1;
    double wall_ms = 0; // informational only; never serialized
};

// Node count charged to a run that exceeds its wall-clock budget.
inline constexpr long long kTimeoutPenaltyNodes = 1'000'000'000;

struct TuneReport {
    std::uint64_t seed = 0;
    std::string corpus_fingerprint;
    std::vector<CeConfig> configs;
    std::vector<TuneRun> runs;           // config-major, instance order within
    std::vector<long long> total_nodes;  // per config, timeouts as penalty
    int winner = 0;                      // least total nodes, ties by config order

    // Canonical serialization: deterministic for identical inputs and seed
    // (wall-clock times are deliberately excluded).
    std::string to_json() const;
};

// Runs every (config, instance) pair with the given per-run wall budget and
// picks the configuration with the smallest aggregate node count.
TuneReport tune(const std::vector<TuneInstance>& corpus, const ConfigGrid& grid,
                std::chrono::milliseconds budget_per_run, std::uint64_t seed);

// FNV-1a over the concatenated canonical instance serializations.
std::string corpus_fingerprint(const std::vector<TuneInstance>& corpus);

const char* to_string(CeLowerBound b);
const char* to_string(CeReduction r);
const char* to_string(CeBranchOrder o);

} // namespace gmod
