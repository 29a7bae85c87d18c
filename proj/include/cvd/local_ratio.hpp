#pragma once

#include <cstdint>
#include <span>

#include "cvd/cost.hpp"
#include "cvd/exact.hpp"
#include "cvd/graph.hpp"

namespace cvd {

// Counts of the branches taken by one run of the approximation algorithm.
struct ApxTrace {
    std::size_t zero_deletions = 0;
    std::size_t contractions = 0;
    std::size_t subtractions = 0;
    std::size_t reinsertions = 0; // zero-cost vertices that had to be put back
    std::size_t largest_local = 0; // largest certificate used in a subtraction
};

// Local-ratio 2-approximation. The root of every certificate is a vertex of
// maximum degree (least index on ties); zero-cost vertices are removed least
// index first and twins are contracted least pair first.
HittingSet cluster_vd_apx(const Graph& g, const CostFn& c, ApxTrace* trace = nullptr);

// min c(v)/c_H(v) over the vertices with c_H(v) > 0. ContractViolation when c_H is
// identically zero, the lengths differ, or c is zero where c_H is positive.
Rational lambda_star(std::span<const Rational> c, std::span<const std::int64_t> c_h);

struct Contraction {
    InducedSubgraph reduced; // g - u'
    CostFn costs;            // indexed like reduced.graph
};

// Deletes u' and adds its cost to u. ContractViolation unless u, u' are true twins.
Contraction contract_twins(const Graph& g, const CostFn& c, Vertex u, Vertex u2);

} // namespace cvd
