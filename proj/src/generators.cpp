#include "cvd/generators.hpp"

#include <limits>
#include <random>

namespace cvd {

namespace {

Graph from_list(std::size_t n, std::initializer_list<Edge> edges) {
    std::vector<Edge> list(edges);
    return Graph::from_edges(n, list);
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

} // namespace

Graph gnp(std::size_t n, const Rational& p, std::uint64_t seed) {
    if (sgn(p) < 0 || p > 1) throw ContractViolation("gnp: p must lie in [0, 1]");
    if (!p.get_den().fits_ulong_p()) throw ContractViolation("gnp: denominator of p too large");
    const std::uint64_t den = p.get_den().get_ui();
    const std::uint64_t num = p.get_num().get_ui();
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (draw_below(rng, den) < num) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw ContractViolation("cycle_graph: need at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph wheel_graph(std::size_t k) {
    if (k < 4) throw ContractViolation("wheel_graph: need at least 4 vertices");
    std::vector<Edge> edges;
    const std::size_t rim = k - 1;
    for (Vertex i = 0; i < rim; ++i) {
        edges.emplace_back(0, i + 1);
        edges.emplace_back(i + 1, (i + 1) % rim + 1);
    }
    return Graph::from_edges(k, edges);
}

Graph star_graph(std::size_t k) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= k; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(k + 1, edges);
}

Graph two_p3_apex() {
    return from_list(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {2, 3}, {4, 5}, {5, 6}});
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph::from_edges(10, edges);
}

Graph figure3_graph() {
    return from_list(8, {{3, 1}, {1, 2}, {2, 0}, {0, 3}, {2, 4}, {1, 4}, {2, 3}, {2, 5},
                         {3, 4}, {0, 5}, {0, 4}, {0, 1}, {0, 6}, {1, 6}, {3, 7}, {0, 7}});
}

Graph figure4_graph() {
    return from_list(6, {{0, 2}, {3, 5}, {0, 1}, {0, 3}, {0, 4}, {2, 1}, {1, 3}, {2, 3}, {5, 1}, {4, 3}});
}

std::vector<std::string> named_instances() {
    return {"gnp", "path", "cycle", "wheel", "star", "2p3apex", "petersen", "figure3", "figure4"};
}

} // namespace cvd
