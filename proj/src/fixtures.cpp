#include "gmod/fixtures.hpp"

namespace gmod::fixtures {

namespace {

Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

} // namespace

Graph hcd_demo() {
    // 0..2 triangle; 3..7 dense block (path 3-4-5-6-7 plus {3,6},{3,7},
    // {4,7},{5,7}, edge connectivity 3); bridges 0-7, 1-5, 0-6.
    return from_edges(8, {{0, 1}, {1, 2}, {0, 2},
                          {3, 4}, {4, 5}, {5, 6}, {6, 7},
                          {3, 6}, {3, 7}, {4, 7}, {5, 7},
                          {0, 7}, {1, 5}, {0, 6}});
}

Graph anonymity_demo() {
    return from_edges(6, {{0, 3}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
}

Graph local_search_cover_demo() {
    return from_edges(6, {{0, 3}, {0, 1}, {1, 2}, {1, 3}, {1, 4},
                          {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}});
}

std::vector<int> local_search_cover_demo_cover() {
    return {0, 2, 3, 4, 5};
}

Graph above_lp_demo() {
    return from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}, {3, 4}, {3, 5}});
}

Graph crown_demo() {
    // sides {0,2,4} and {1,3,5}; i-j edges for all cross pairs except the
    // matching 0-1, 2-3, 4-5
    return from_edges(6, {{0, 3}, {0, 5}, {2, 1}, {2, 5}, {4, 1}, {4, 3}});
}

std::vector<std::vector<int>> crown_demo_lists() {
    return std::vector<std::vector<int>>(6, {1, 2, 3});
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p)
                g.add_edge(u, v);
    return g;
}

} // namespace gmod::fixtures
