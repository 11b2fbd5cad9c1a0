#pragma once

#include <compare>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace gmod {

struct Arc {
    int from;
    int to;

    Arc(int f, int t) : from(f), to(t) {
        if (f == t)
            throw std::invalid_argument("arc endpoints must be distinct");
    }

    auto operator<=>(const Arc&) const = default;
};

using ArcSet = std::set<Arc>;

// Complete orientation: exactly one arc between every pair of vertices.
class Tournament {
public:
    // Starts as the transitive tournament (u -> v for u < v).
    explicit Tournament(int n);
    // Builds from an explicit arc list; throws unless every pair is covered
    // exactly once.
    static Tournament from_arcs(int n, const std::vector<Arc>& arcs);
    static Tournament random(int n, std::mt19937_64& rng);

    int num_vertices() const { return n_; }
    bool has_arc(int u, int v) const;
    // Directs the pair {u,v} as u -> v.
    void orient(int u, int v);
    std::vector<Arc> arcs() const;

private:
    int n_ = 0;
    std::vector<std::vector<char>> forward_;
};

// True iff deleting `s` from the tournament leaves a DAG. Throws
// std::invalid_argument when `s` contains an arc not present.
bool is_acyclic_after(const Tournament& t, const ArcSet& s);

struct FasExactOptions {
    int max_vertices = 9;
};
// Minimum deletion set making the tournament acyclic: the backward arcs of
// the best vertex permutation, found by exhaustive permutation search.
ArcSet fas_exact(const Tournament& t, const FasExactOptions& opts = {});

// Strictly smaller valid deletion set within symmetric difference k of `s`,
// or nullopt. Exhaustive over removal subsets of `s` and addition subsets of
// the remaining arcs, in increasing size.
std::optional<ArcSet> ls_fast(const Tournament& t, const ArcSet& s, int k);

} // namespace gmod
