#include <doctest.h>

#include <random>

#include "gmod/fixtures.hpp"
#include "gmod/tuner.hpp"

using namespace gmod;

namespace {

std::vector<TuneInstance> cluster_corpus() {
    std::vector<TuneInstance> corpus;
    for (int i = 0; i < 3; ++i) {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        corpus.push_back({"cluster-" + std::to_string(i), g});
    }
    return corpus;
}

std::vector<TuneInstance> dense_corpus(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<TuneInstance> corpus;
    for (int i = 0; i < count; ++i)
        corpus.push_back({"dense-" + std::to_string(i), fixtures::random_graph(7, 0.5, rng)});
    return corpus;
}

} // namespace

TEST_SUITE_BEGIN("pbo-tuner");

TEST_CASE("config enumeration") {
    auto configs = enumerate_configs(ConfigGrid::full(), 9);
    CHECK(configs.size() == 24);
    for (const auto& c : configs)
        CHECK(c.seed == 9);

    ConfigGrid point{{CeLowerBound::p3_packing}, {CeReduction::none}, {2},
                     {CeBranchOrder::min_id}};
    CHECK(enumerate_configs(point).size() == 1);

    ConfigGrid broken = ConfigGrid::full();
    broken.branch_orders.clear();
    CHECK_THROWS_AS(enumerate_configs(broken), std::invalid_argument);
}

TEST_CASE("cluster graphs cost almost nothing and the first config wins") {
    auto report = tune(cluster_corpus(), ConfigGrid::full(), std::chrono::milliseconds(2000), 1);
    CHECK(report.winner == 0); // all totals tie, first config kept
    for (long long total : report.total_nodes)
        CHECK(total == report.total_nodes[0]);
    for (const auto& run : report.runs) {
        CHECK(!run.timed_out);
        CHECK(run.opt_cost == 0);
    }
}

TEST_CASE("identical inputs give byte-identical reports") {
    auto corpus = dense_corpus(4, 77);
    auto a = tune(corpus, ConfigGrid::full(), std::chrono::milliseconds(5000), 3);
    auto b = tune(corpus, ConfigGrid::full(), std::chrono::milliseconds(5000), 3);
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("packing bound dominates no bound on dense instances") {
    auto corpus = dense_corpus(4, 78);
    auto report = tune(corpus, ConfigGrid::full(), std::chrono::milliseconds(5000), 4);
    for (long long total : report.total_nodes)
        CHECK(report.total_nodes[report.winner] <= total);
    long long packing_total = 0, none_total = 0;
    for (std::size_t ci = 0; ci < report.configs.size(); ++ci) {
        if (report.configs[ci].lower_bound == CeLowerBound::p3_packing)
            packing_total += report.total_nodes[ci];
        else
            none_total += report.total_nodes[ci];
    }
    CHECK(packing_total < none_total);
    CHECK(report.configs[report.winner].lower_bound == CeLowerBound::p3_packing);
}

TEST_CASE("empty corpus is rejected") {
    CHECK_THROWS_AS(tune({}, ConfigGrid::full(), std::chrono::milliseconds(100), 0),
                    std::invalid_argument);
}

TEST_SUITE_END();
