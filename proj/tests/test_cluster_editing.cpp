#include <doctest.h>

#include <functional>
#include <random>

#include "gmod/cluster_editing.hpp"
#include "gmod/fixtures.hpp"
#include "gmod/oracles.hpp"
#include "gmod/tuner.hpp"

using namespace gmod;

namespace {

Graph p3() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

bool cluster_graph(const Graph& g) {
    return !find_conflict_triple(g, CeBranchOrder::min_id).has_value();
}

// Minimum edit cost of a weighted instance by partition enumeration.
long long weighted_opt(const WeightedCeInstance& inst) {
    int n = inst.size();
    long long best = std::numeric_limits<long long>::max();
    std::vector<int> block(n, 0);
    std::function<void(int, int)> rec = [&](int v, int blocks) {
        if (v == n) {
            long long cost = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    bool same = block[a] == block[b];
                    long long w = inst.weight[a][b];
                    if (same && w < 0)
                        cost -= w;
                    if (!same && w > 0)
                        cost += w;
                }
            best = std::min(best, cost);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            block[v] = b;
            rec(v + 1, std::max(blocks, b + 1));
        }
    };
    if (n == 0)
        return 0;
    rec(0, 0);
    return best;
}

} // namespace

TEST_SUITE_BEGIN("cluster-editing");

TEST_CASE("conflict triples") {
    Graph two_triangles(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        two_triangles.add_edge(u, v);
    CHECK(!find_conflict_triple(two_triangles, CeBranchOrder::min_id).has_value());

    auto t = find_conflict_triple(p3(), CeBranchOrder::min_id);
    REQUIRE(t);
    CHECK(t->u == 0);
    CHECK(t->v == 1);
    CHECK(t->w == 2);

    Graph paw(4); // triangle 0,1,2 plus pendant 3 on 0
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {0, 3}})
        paw.add_edge(u, v);
    auto pt = find_conflict_triple(paw, CeBranchOrder::max_conflict);
    REQUIRE(pt);
    CHECK((pt->u == 3 || pt->w == 3)); // every triple runs through the pendant
}

TEST_CASE("lower bound examples") {
    CeConfig cfg;
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(1, 2);
    k3.add_edge(0, 2);
    CHECK(ce_lower_bound(k3, cfg) == 0);
    CHECK(ce_lower_bound(p3(), cfg) == 1);
    Graph c5(5);
    for (int v = 0; v < 5; ++v)
        c5.add_edge(v, (v + 1) % 5);
    CHECK(ce_lower_bound(c5, cfg) >= 2);
    cfg.lower_bound = CeLowerBound::none;
    CHECK(ce_lower_bound(c5, cfg) == 0);
}

TEST_CASE("lower bound never exceeds the optimum") {
    std::mt19937_64 rng(61);
    CeConfig cfg;
    for (int round = 0; round < 60; ++round) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = fixtures::random_graph(n, 0.5, rng);
        CHECK(ce_lower_bound(g, cfg) <= brute::ce_opt(g));
    }
}

TEST_CASE("critical clique merging") {
    Graph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            k4.add_edge(u, v);
    auto red = ce_reduce(k4, 0);
    CHECK(red.reduced.size() == 1);
    CHECK(red.forced.empty());
    CHECK(!red.infeasible);

    // two true twins attached identically
    Graph twins(4);
    twins.add_edge(0, 1); // the twins
    twins.add_edge(0, 2);
    twins.add_edge(1, 2);
    twins.add_edge(2, 3);
    auto red2 = ce_reduce(twins, 5);
    CHECK(red2.reduced.size() == 3);
    bool merged = false;
    for (const auto& m : red2.reduced.members)
        merged = merged || m == std::vector<int>{0, 1};
    CHECK(merged);
}

TEST_CASE("reduction preserves the optimum on random graphs") {
    std::mt19937_64 rng(62);
    for (int round = 0; round < 60; ++round) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = fixtures::random_graph(n, 0.5, rng);
        auto red = ce_reduce(g, n * n);
        CHECK(weighted_opt(red.reduced) == brute::ce_opt(g));
    }
}

TEST_CASE("tiny editing instances") {
    Graph clusters(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        clusters.add_edge(u, v);
    auto zero = ce_solve(clusters, 0, CeConfig{});
    REQUIRE(zero);
    CHECK(zero->empty());

    auto one = ce_solve(p3(), 1, CeConfig{});
    REQUIRE(one);
    CHECK(one->size() == 1);
    CHECK(cluster_graph(apply_edits(p3(), *one)));
    CHECK(!ce_solve(p3(), 0, CeConfig{}).has_value());

    // two triangles sharing vertex 2
    Graph g(5);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}})
        g.add_edge(u, v);
    CHECK(brute::ce_opt(g) == 2);
    auto sol = ce_solve(g, 2, CeConfig{});
    REQUIRE(sol);
    CHECK(sol->size() == 2);
    CHECK(sol->insertions.empty());
    CHECK(cluster_graph(apply_edits(g, *sol)));
}

TEST_CASE("all grid configurations give the brute-force optimum") {
    std::mt19937_64 rng(63);
    auto configs = enumerate_configs(ConfigGrid::full());
    REQUIRE(configs.size() == 24);
    for (int round = 0; round < 25; ++round) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = fixtures::random_graph(n, 0.5, rng);
        int opt = brute::ce_opt(g);
        for (const CeConfig& cfg : configs) {
            auto sol = ce_solve(g, n * n, cfg);
            REQUIRE(sol);
            CHECK(sol->size() == opt);
            CHECK(cluster_graph(apply_edits(g, *sol)));
        }
        if (opt > 0)
            CHECK(!ce_solve(g, opt - 1, CeConfig{}).has_value());
    }
}

TEST_CASE("node counts are reported and deterministic") {
    std::mt19937_64 rng(64);
    Graph g = fixtures::random_graph(7, 0.5, rng);
    CeSolveStats a, b;
    ce_solve(g, 21, CeConfig{}, &a);
    ce_solve(g, 21, CeConfig{}, &b);
    CHECK(a.nodes == b.nodes);
    CHECK(a.nodes > 0);
    CHECK(!a.timed_out);
}

TEST_SUITE_END();
