#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvd/graph.hpp"
#include "cvd/rational.hpp"

namespace cvd {

// G(n, p) with exact rational p: each pair u < v (lexicographic) is an edge iff a
// uniform draw from [0, den p) falls below num p. The draws come from
// std::mt19937_64 by rejection sampling, so the output depends only on the seed.
Graph gnp(std::size_t n, const Rational& p, std::uint64_t seed);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
// Hub 0 joined to the cycle 1..k-1 (k vertices in total, k >= 4).
Graph wheel_graph(std::size_t k);
// Centre 0 with leaves 1..k.
Graph star_graph(std::size_t k);
// Apex 0 over the paths 1-2-3 and 4-5-6.
Graph two_p3_apex();
Graph petersen_graph();
// figure3: universal vertex 0 over a K4 on 1..4 with pendants 5-2, 6-1, 7-3.
// figure4: root 0 with N(0) = {1,2,3,4}, vertex 5 at distance two (adjacent to 1 and 3).
// Edge lists in data/figure3.txt and data/figure4.txt.
Graph figure3_graph();
Graph figure4_graph();

std::vector<std::string> named_instances();

} // namespace cvd
