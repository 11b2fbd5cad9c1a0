#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gmod/bench.hpp"
#include "gmod/fixtures.hpp"
#include "gmod/io.hpp"

using namespace gmod;

TEST_SUITE_BEGIN("cli-bench");

TEST_CASE("edge list parsing") {
    std::istringstream in("1 2\n2 3\n");
    auto lg = parse_edge_list(in);
    CHECK(lg.graph.num_vertices() == 3);
    CHECK(lg.graph.num_edges() == 2);
    CHECK(lg.labels == std::vector<long long>{1, 2, 3});
    CHECK(lg.graph.has_edge(0, 1));
    CHECK(lg.graph.has_edge(1, 2));
    CHECK(!lg.graph.has_edge(0, 2));
}

TEST_CASE("dimacs parses to the same graph") {
    std::istringstream in("c tiny path\np edge 3 2\ne 1 2\ne 2 3\n");
    auto lg = parse_dimacs(in);
    CHECK(lg.graph.num_vertices() == 3);
    CHECK(lg.graph.has_edge(0, 1));
    CHECK(lg.graph.has_edge(1, 2));

    std::istringstream iso("p edge 4 1\ne 1 2\n");
    CHECK(parse_dimacs(iso).graph.num_vertices() == 4); // isolated vertices kept
}

TEST_CASE("parse errors carry line and column") {
    std::istringstream loop("1 1\n");
    CHECK_THROWS_WITH_AS(parse_edge_list(loop), doctest::Contains("self-loop"), ParseError);

    std::istringstream bad("1 x\n");
    try {
        parse_edge_list(bad);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 3);
    }

    std::istringstream extra("1 2 3\n");
    CHECK_THROWS_AS(parse_edge_list(extra), ParseError);
}

TEST_CASE("duplicate edges are warned about and dropped") {
    std::istringstream in("1 2\n2 1\n");
    auto lg = parse_edge_list(in);
    CHECK(lg.graph.num_edges() == 1);
    REQUIRE(lg.warnings.size() == 1);
    CHECK(lg.warnings[0].find("duplicate") != std::string::npos);
}

TEST_CASE("comments are ignored") {
    std::istringstream in("# a path\n1 2 # trailing\n\n2 3\n");
    CHECK(parse_edge_list(in).graph.num_edges() == 2);
}

TEST_CASE("tournament format round trip and validation") {
    std::istringstream in("3\n1 2\n2 3\n3 1\n");
    Tournament t = parse_tournament(in);
    CHECK(t.has_arc(2, 0));
    std::istringstream again(serialize_tournament(t));
    Tournament t2 = parse_tournament(again);
    CHECK(t.arcs() == t2.arcs());

    std::istringstream incomplete("3\n1 2\n");
    CHECK_THROWS_AS(parse_tournament(incomplete), ParseError);
}

TEST_CASE("list coloring format round trip") {
    std::istringstream in("3\n2 1 2\n1 2\n3 1 2 3\n1 2\n2 3\n");
    auto f = parse_listcoloring(in);
    CHECK(f.graph.num_edges() == 2);
    CHECK(f.lists[0] == std::vector<int>{1, 2});
    CHECK(f.lists[1] == std::vector<int>{2});
    std::istringstream again(serialize_listcoloring(f));
    CHECK(parse_listcoloring(again) == f);
}

TEST_CASE("round trips are identities on random instances") {
    std::mt19937_64 rng(71);
    for (int round = 0; round < 40; ++round) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g = fixtures::random_graph(n, 0.5, rng);
        LabeledGraph lg;
        lg.graph = g;
        for (int v = 0; v < n; ++v)
            lg.labels.push_back(v + 1);

        if (g.num_edges() > 0) { // plain edge lists cannot express isolated vertices
            std::istringstream in(serialize_edge_list(lg));
            auto back = parse_edge_list(in);
            std::istringstream in2(serialize_edge_list(back));
            CHECK(parse_edge_list(in2) == back);
        }
        std::istringstream din(serialize_dimacs(lg));
        CHECK(parse_dimacs(din) == lg);

        Tournament t = Tournament::random(1 + static_cast<int>(rng() % 7), rng);
        std::istringstream tin(serialize_tournament(t));
        CHECK(parse_tournament(tin).arcs() == t.arcs());
    }
}

TEST_CASE("rational strings") {
    CHECK(rational_string(5) == "5/2");
    CHECK(rational_string(4) == "2");
    CHECK(rational_string(0) == "0");
}

TEST_CASE("builtin fixtures reproduce the documented costs") {
    auto records = run_builtin_fixtures();
    REQUIRE(records.size() == 4);
    for (const auto& rec : records) {
        CHECK(rec.valid);
        CHECK(rec.status == "ok");
    }
    CHECK(records[0].problem == "hcd");
    CHECK(records[0].cost == 3);
    CHECK(records[1].problem == "anon");
    CHECK(records[1].cost == 1);
    CHECK(records[2].problem == "vc-ls");
    CHECK(records[2].cost == 4);
    CHECK(records[3].problem == "vc-lp");
    CHECK(records[3].cost == 3);
    CHECK(records[3].detail.at("lp") == "5/2");

    // determinism: repeated runs agree field for field (modulo wall time)
    auto again = run_builtin_fixtures();
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].cost == again[i].cost);
        CHECK(records[i].valid == again[i].valid);
    }
}

TEST_CASE("bench runs a directory and keeps going on per-instance failures") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "gmod_bench_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    {
        std::ofstream(dir / "a_path.edges") << "1 2\n2 3\n";
        std::ofstream(dir / "b_clique.edges") << "1 2\n1 3\n2 3\n";
        std::ofstream(dir / "c_broken.edges") << "1 1\n";
    }

    BenchOptions heuristic{"hs", "", {{"policy", "lexicographic"}}, 0};
    auto hs_records = bench_directory(dir.string(), heuristic);
    REQUIRE(hs_records.size() == 3);
    CHECK(hs_records[0].instance == "a_path.edges"); // sorted by filename
    CHECK(hs_records[2].status.find("error") == 0);  // self-loop recorded, run continued

    BenchOptions exact{"hcd", "exact", {}, 0};
    auto exact_records = bench_directory(dir.string(), exact);
    REQUIRE(exact_records.size() == 3);
    for (std::size_t i = 0; i < 2; ++i) { // heuristic never beats exact
        CHECK(hs_records[i].valid);
        CHECK(exact_records[i].valid);
        CHECK(hs_records[i].cost >= exact_records[i].cost);
    }

    // empty corpus gives an empty stream
    fs::path empty = fs::temp_directory_path() / "gmod_bench_empty";
    fs::remove_all(empty);
    fs::create_directories(empty);
    CHECK(bench_directory(empty.string(), heuristic).empty());

    // invalid local-search seed solution becomes an error record
    fs::path tdir = fs::temp_directory_path() / "gmod_bench_tour";
    fs::remove_all(tdir);
    fs::create_directories(tdir);
    std::ofstream(tdir / "tri.tour") << "3\n1 2\n2 3\n3 1\n";
    BenchOptions bad_seed{"fast-ls", "ls", {{"seed_solution", "empty"}}, 0};
    auto bad = bench_directory(tdir.string(), bad_seed);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].status.find("error") == 0);
    CHECK(!bad[0].valid);
    BenchOptions good_seed{"fast-ls", "ls", {}, 0};
    auto good = bench_directory(tdir.string(), good_seed);
    REQUIRE(good.size() == 1);
    CHECK(good[0].valid);
    CHECK(good[0].cost == 1);
}

TEST_CASE("result records serialize with a schema version") {
    ResultRecord rec;
    rec.problem = "hcd";
    rec.instance = "x";
    rec.solver = "exact";
    rec.status = "ok";
    rec.cost = 3;
    std::string json = to_json(rec);
    CHECK(json.find("\"schema_version\":1") != std::string::npos);
    CHECK(json.find("\"cost\":3") != std::string::npos);
}

TEST_SUITE_END();
