#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "cvd/graph.hpp"
#include "cvd/rational.hpp"

namespace cvd {

// Induced cycle of length >= 4. Normalised so that the least vertex comes first
// and the second entry is the smaller of its two cycle neighbours.
struct Hole {
    VertexList cycle;
};

// Vertices in elimination order: each vertex's later neighbours form a clique.
struct EliminationOrder {
    VertexList order;
};

// Maximal cliques (sorted vertex lists, nodes in lexicographic order) joined by
// tree edges; a forest when the graph is disconnected.
struct CliqueTree {
    std::vector<VertexList> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct TwoP3 {
    P3Witness first;
    P3Witness second;
};

// Throws InvariantViolation unless `hole` is an induced cycle of length >= 4 in g.
void check_hole(const Graph& g, const Hole& hole);
Hole normalize_hole(VertexList cycle);

// Maximum cardinality search followed by a verification pass; a failed
// verification is turned into a hole certificate.
std::variant<EliminationOrder, Hole> peo_or_hole(const Graph& g);

bool is_elimination_order(const Graph& g, const EliminationOrder& order);

// Requires a valid elimination order (ContractViolation otherwise).
CliqueTree clique_tree(const Graph& g, const EliminationOrder& order);

// For a chordal g with clique tree t: two anticomplete induced P3s, if any exist.
std::optional<TwoP3> find_2p3_chordal(const Graph& g, const CliqueTree& t);

// A maximal clique whose removal leaves a cluster graph. g must be chordal and
// 2P3-free; PreconditionError is raised when a 2P3 is detected on the way.
VertexList hitting_clique(const Graph& g, const CliqueTree& t);

struct WeightedClique {
    VertexList clique;
    Rational weight;
};

WeightedClique max_weight_clique_chordal(const Graph& g, const EliminationOrder& order, std::span<const Rational> cost);

} // namespace cvd
