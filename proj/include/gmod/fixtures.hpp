#pragma once

#include <random>

#include "gmod/graph.hpp"
#include "gmod/tournament.hpp"

namespace gmod::fixtures {

// Triangle {0,1,2} joined to a dense 5-vertex cluster {3..7} by three
// bridging edges; deleting exactly those three is the optimal clustering.
Graph hcd_demo();

// Six vertices with degree sequence (1,1,3,2,2,1); inserting the single edge
// {3,5} makes it 2-anonymous.
Graph anonymity_demo();

// Ten-edge graph whose bundled size-5 cover improves to size 4 within
// exchange distance 3.
Graph local_search_cover_demo();
std::vector<int> local_search_cover_demo_cover();

// Triangle hanging off a hub with two pendants: LP value 5/2, minimum cover
// size 3 (the hub plus two triangle vertices).
Graph above_lp_demo();

// Crown pattern (K33 minus a perfect matching, interleaved ids) where greedy
// insertion needs 3 colors but a per-step budget of 2 recolorings gets 2.
Graph crown_demo();
std::vector<std::vector<int>> crown_demo_lists();

// G(n,p) with a seeded generator; pairs scanned in fixed order.
Graph random_graph(int n, double p, std::mt19937_64& rng);

} // namespace gmod::fixtures
