#include <doctest.h>

#include <algorithm>
#include <random>

#include "gmod/errors.hpp"
#include "gmod/oracles.hpp"
#include "gmod/tournament.hpp"

using namespace gmod;

namespace {

Tournament cyclic_triangle() {
    return Tournament::from_arcs(3, {Arc(0, 1), Arc(1, 2), Arc(2, 0)});
}

int symdiff(const ArcSet& a, const ArcSet& b) {
    int d = 0;
    for (const Arc& x : a)
        d += !b.count(x);
    for (const Arc& x : b)
        d += !a.count(x);
    return d;
}

// Exhaustive neighbourhood search: flip up to k arcs of the deletion set.
std::optional<ArcSet> brute_exchange(const Tournament& t, const ArcSet& s, int k) {
    std::vector<Arc> arcs = t.arcs();
    int m = static_cast<int>(arcs.size());
    std::optional<ArcSet> best;
    std::vector<int> idx;
    std::function<void(int, int, int)> rec = [&](int want, int pos, int from) {
        if (best)
            return;
        if (pos == want) {
            ArcSet candidate = s;
            for (int i = 0; i < want; ++i) {
                const Arc& a = arcs[idx[i]];
                if (candidate.count(a))
                    candidate.erase(a);
                else
                    candidate.insert(a);
            }
            if (candidate.size() < s.size() && is_acyclic_after(t, candidate))
                best = candidate;
            return;
        }
        for (int c = from; c < m; ++c) {
            idx[pos] = c;
            rec(want, pos + 1, c + 1);
        }
    };
    for (int want = 1; want <= k && !best; ++want) {
        idx.assign(want, 0);
        rec(want, 0, 0);
    }
    return best;
}

} // namespace

TEST_SUITE_BEGIN("fast-ls");

TEST_CASE("tournament construction validates completeness") {
    CHECK_THROWS_AS(Tournament::from_arcs(3, {Arc(0, 1), Arc(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(Tournament::from_arcs(2, {Arc(0, 1), Arc(1, 0)}), std::invalid_argument);
    auto t = Tournament::from_arcs(3, {Arc(0, 1), Arc(1, 2), Arc(2, 0)});
    CHECK(t.has_arc(2, 0));
    CHECK(!t.has_arc(0, 2));
    CHECK(t.arcs().size() == 3);
}

TEST_CASE("acyclicity after deletions") {
    Tournament trans(4); // transitive by construction
    CHECK(is_acyclic_after(trans, {}));
    auto tri = cyclic_triangle();
    CHECK(!is_acyclic_after(tri, {}));
    for (const Arc& a : tri.arcs())
        CHECK(is_acyclic_after(tri, {a}));
    CHECK_THROWS_AS(is_acyclic_after(tri, {Arc(0, 2)}), std::invalid_argument);
}

TEST_CASE("exact deletion sets on tiny tournaments") {
    Tournament trans(5);
    CHECK(fas_exact(trans).empty());
    auto tri = cyclic_triangle();
    CHECK(fas_exact(tri).size() == 1);
    Tournament big(10);
    CHECK_THROWS_AS(fas_exact(big), ResourceCapError);
}

TEST_CASE("permutation solver agrees with the arc-subset oracle") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 30; ++round) {
        Tournament t = Tournament::random(6, rng);
        auto sol = fas_exact(t);
        CHECK(is_acyclic_after(t, sol));
        CHECK(static_cast<int>(sol.size()) == brute::fas_opt(t));
    }
}

TEST_CASE("optimal size is invariant under relabeling") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 10; ++round) {
        Tournament t = Tournament::random(6, rng);
        std::vector<int> perm{3, 5, 0, 1, 4, 2};
        std::vector<Arc> relabeled;
        for (const Arc& a : t.arcs())
            relabeled.emplace_back(perm[a.from], perm[a.to]);
        Tournament t2 = Tournament::from_arcs(6, relabeled);
        CHECK(fas_exact(t).size() == fas_exact(t2).size());
    }
}

TEST_CASE("local search on a cyclic triangle with a redundant pair") {
    auto tri = cyclic_triangle();
    ArcSet s{Arc(0, 1), Arc(1, 2)};
    REQUIRE(is_acyclic_after(tri, s));
    auto better = ls_fast(tri, s, 3);
    REQUIRE(better);
    CHECK(better->size() == 1);
    CHECK(is_acyclic_after(tri, *better));
    CHECK(symdiff(*better, s) <= 3);
}

TEST_CASE("minimum solutions admit no improvement") {
    std::mt19937_64 rng(43);
    for (int round = 0; round < 10; ++round) {
        Tournament t = Tournament::random(6, rng);
        auto sol = fas_exact(t);
        for (int k = 1; k <= 4; ++k)
            CHECK(!ls_fast(t, sol, k).has_value());
    }
    CHECK_THROWS_AS(ls_fast(cyclic_triangle(), {}, 2), std::invalid_argument);
}

TEST_CASE("local search agrees with brute force on redundant seeds") {
    std::mt19937_64 rng(44);
    for (int round = 0; round < 40; ++round) {
        int n = 6 + static_cast<int>(rng() % 2);
        Tournament t = Tournament::random(n, rng);
        // redundant seed: backward arcs of a random permutation
        std::vector<int> perm(n);
        for (int v = 0; v < n; ++v)
            perm[v] = v;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i)
            pos[perm[i]] = i;
        ArcSet s;
        for (const Arc& a : t.arcs())
            if (pos[a.from] > pos[a.to])
                s.insert(a);
        REQUIRE(is_acyclic_after(t, s));
        int k = 1 + static_cast<int>(rng() % 4);
        auto mine = ls_fast(t, s, k);
        auto ref = brute_exchange(t, s, k);
        CHECK(mine.has_value() == ref.has_value());
        if (mine) {
            CHECK(mine->size() < s.size());
            CHECK(symdiff(*mine, s) <= k);
            CHECK(is_acyclic_after(t, *mine));
        }
    }
}

TEST_SUITE_END();
