#pragma once

#include <functional>

#include "cvd/cost.hpp"
#include "cvd/graph.hpp"

namespace cvd {

struct HittingSet {
    VertexList vertices; // ascending
    Rational cost;
    bool minimal = false;
};

struct Validation {
    bool is_hitting = false;
    bool is_minimal = false;
    Rational cost;
};

// is_hitting: g - x is a cluster graph. is_minimal: additionally no single member can be dropped.
Validation validate(const Graph& g, const CostFn& c, const VertexList& x);

inline constexpr std::size_t kOracleMaxOrder = 20;

// Exhaustive minimum-cost hitting set (n <= 20, OracleRefusal otherwise).
// Among optimal sets the one with the fewest vertices wins, then the
// lexicographically least vertex list.
HittingSet cluster_vd_exact(const Graph& g, const CostFn& c);

// Independent exact solver: branch three ways on the vertices of an induced P3,
// pruning against the best cost found. Returns OPT only.
Rational cluster_vd_branching(const Graph& g, const CostFn& c);

using Oracle = std::function<Rational(const Graph&, const CostFn&)>;

// OPT via cluster_vd_exact.
Rational exact_opt(const Graph& g, const CostFn& c);

} // namespace cvd
