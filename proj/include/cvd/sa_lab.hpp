#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvd/cost.hpp"
#include "cvd/graph.hpp"
#include "cvd/simplex.hpp"

namespace cvd {

// Singleton(v) when !pair, else Pair(a, b) with a < b.
struct SaVar {
    Vertex a = 0;
    Vertex b = 0;
    bool pair = false;

    std::string name() const; // "x3" or "x1_4"
};

struct LpRow {
    std::vector<std::pair<std::size_t, Rational>> terms; // (variable index, coefficient)
    Rational rhs;                                        // sense is always >=
    std::string label;
};

// Which labellings of a P3 {u,v,w} produce a row x_u + x_v + x_w >= 1 + x_uv + x_vw.
// The level-1 lift of the covering row by (1 - x_v) gives this row for every
// choice of v, so EveryLabeling is the actual SA_1 system; Middle keeps only the
// row whose pair terms are the two edges and is strictly weaker.
enum class Type1Rows {
    Middle,
    EveryLabeling,
};

struct LinearProgram {
    std::size_t order = 0;
    int level = 0;
    std::vector<SaVar> vars; // singletons 0..order-1, then pairs in lexicographic order
    std::vector<LpRow> rows;
    std::vector<Rational> objective; // empty until attached

    std::size_t singleton(Vertex v) const { return v; }
    std::size_t pair(Vertex u, Vertex v) const;
};

LinearProgram build_sa(const Graph& g, int r, Type1Rows type1 = Type1Rows::EveryLabeling);

// Unit-cost or weighted objective sum c(v) x_v.
void attach_objective(LinearProgram& lp, const CostFn& c);

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> values; // one per variable
    Rational objective;
    std::vector<Rational> duals; // one per row; proves optimality together with `values`
};

LpSolution lp_min(const LinearProgram& lp, const CostFn& c);

// Slack of every row must be >= 0; returns the index of the first violated row.
std::optional<std::size_t> first_violated_row(const LinearProgram& lp, const std::vector<Rational>& values);

struct GapResult {
    Rational opt;
    Rational lp;
    std::optional<Rational> gap; // nothing means infinite (lp = 0 < opt); 1 when opt = 0
};

GapResult integrality_gap(const Graph& g, const CostFn& c, int r, Type1Rows type1 = Type1Rows::EveryLabeling);

// Length of a shortest cycle, nothing for forests.
std::optional<std::size_t> girth(const Graph& g);
// A shortest cycle as a vertex sequence.
std::optional<VertexList> shortest_cycle(const Graph& g);

struct LbPoint {
    LinearProgram program; // SA_1(g) with unit objective
    std::vector<Rational> values;
    std::optional<std::size_t> violated_row;
    Rational objective;
};

// x_v = 2/5, x_uv = 0 on edges and 1/5 on non-edges. PreconditionError when the
// girth is below 5.
LbPoint lb_point(const Graph& g, Type1Rows type1 = Type1Rows::EveryLabeling);

struct DiagonalCounterexample {
    P3Witness p3;
    std::pair<Vertex, Vertex> diagonal;
};

// Pairs a < b that are both completed to a P3 by one common pair {u, v}.
std::vector<std::pair<Vertex, Vertex>> diagonals(const Graph& g);

// A P3 containing a diagonal whose three singleton values are all below 2/5.
std::optional<DiagonalCounterexample> diagonal_scan(const Graph& g, const LinearProgram& lp, const std::vector<Rational>& values);

// Human-readable LP text (objective, constraints, bounds); rationals as "p/q".
std::string to_lp_text(const LinearProgram& lp);

} // namespace cvd
