#pragma once

#include <optional>

#include "gmod/graph.hpp"

namespace gmod {

struct DegreeSequence {
    std::vector<int> degrees; // indexed by vertex id

    int delta_max() const;
    static DegreeSequence of(const Graph& g);
};

// Every occurring degree value is shared by at least `ell` vertices.
bool is_l_anonymous(const Graph& g, int ell);
bool is_l_anonymous_sequence(const std::vector<int>& degrees, int ell);

struct AnonymizedSequence {
    DegreeSequence targets; // pointwise >= input degrees, ell-anonymous multiset
    int cost = 0;           // total degree increase sum(target - degree)
};

// Minimum-cost ell-anonymous target sequence. Dynamic program over the
// descending-sorted degrees with consecutive blocks of size ell..2*ell-1,
// each raised to its maximum entry.
AnonymizedSequence anonymize_degree_sequence(const DegreeSequence& d, int ell);

// Cheapest grouping with total increase >= floor; blocks may be raised above
// their maximum entry (never beyond n-1), which makes every cost level
// between the optimum and the all-(n-1) sequence reachable. nullopt when no
// grouping reaches the floor.
std::optional<AnonymizedSequence> anonymize_degree_sequence_at_least(const DegreeSequence& d,
                                                                     int ell, int floor);

struct IncrementPlan {
    std::vector<int> increment; // per-vertex demanded degree increase
    int total() const;
};

// Greedy realization: repeatedly join the two highest residual demands,
// skipping pairs that are already adjacent. Returns nullopt when the plan is
// unrealizable as stated (odd total, demand beyond n-1, or a greedy stall).
std::optional<EdgeSet> realize_increments(const Graph& g, const IncrementPlan& plan);

// Two-phase insertion heuristic: anonymize the degree sequence, then realize
// the increments; on failure retry the sequence phase with a strictly larger
// cost floor. Always terminates with a valid insertion set (the complete
// graph is ell-anonymous for ell <= n).
EditSet lt_heuristic(const Graph& g, int ell);

struct AnonExactOptions {
    long long max_combinations = 5'000'000;
};
// Minimum insertion set achieving ell-anonymity via exhaustive search over
// non-edge subsets of size <= k; nullopt when infeasible within k. Throws
// when the subset count exceeds the configured cap.
std::optional<EditSet> anon_exact(const Graph& g, int ell, int k, const AnonExactOptions& opts = {});

// True when a proven lower bound on the optimal insertion count exceeds
// 2*delta^4, the regime in which the sequence-based heuristic is optimal.
bool win_win_certificate(int delta, long long lower_bound);

// Sound lower bound on the optimal insertion count: half the sequence DP
// cost, rounded up (each inserted edge raises the total degree by two).
long long anon_insertion_lower_bound(const Graph& g, int ell);

} // namespace gmod
