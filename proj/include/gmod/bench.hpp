#pragma once

#include <map>
#include <string>
#include <vector>

#include "gmod/graph.hpp"

namespace gmod {

struct ResultRecord {
    std::string problem;
    std::string instance;
    std::string solver;
    std::map<std::string, std::string> params; // k, ell, c, policy, ... as given
    std::string status;                        // ok | infeasible | none | error: ...
    long long cost = -1;
    long long nodes = 0;
    double wall_ms = 0;
    bool valid = false; // set only after re-checking the solution
    std::map<std::string, std::string> detail; // e.g. lp value as "p/q"
};

// One JSON object (single line) per record; schema_version pinned.
std::string to_json(const ResultRecord& r);

// Executes the four bundled demo instances with their documented parameters:
// deletion cost 3, one anonymizing insertion, the 5 -> 4 cover improvement,
// and the (lp 5/2, k=3) cover.
std::vector<ResultRecord> run_builtin_fixtures();

struct BenchOptions {
    std::string problem; // hcd | hs | anon | vc-lp | vc-ls | fast-ls | ilc | ce
    std::string solver;  // problem-specific; empty picks the default
    std::map<std::string, std::string> params;
    long long timeout_ms = 0; // 0 = none; applies to ce runs
};

// Runs every parseable instance file in `dir` (sorted by filename); failures
// become error records, the run continues.
std::vector<ResultRecord> bench_directory(const std::string& dir, const BenchOptions& options);

} // namespace gmod
