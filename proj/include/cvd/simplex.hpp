#pragma once

#include <utility>
#include <vector>

#include "cvd/rational.hpp"

namespace cvd {

// min c.x subject to A x >= b, x >= 0, with A stored row-wise and sparse.
struct LpProblem {
    std::size_t num_vars = 0;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    std::vector<Rational> rhs;
    std::vector<Rational> objective; // length num_vars
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct SimplexResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rational> x;     // primal values
    std::vector<Rational> duals; // one per row, >= 0
    Rational value;
    std::size_t pivots = 0;
};

// Exact dual simplex from the all-slack basis, with smallest-index choices for
// both the leaving row and the entering column (no cycling). Needs a
// nonnegative objective (ContractViolation otherwise), so the problem is never
// unbounded. An optimal answer is returned only after checking primal
// feasibility, dual feasibility and equality of both objective values.
SimplexResult simplex_min(const LpProblem& lp);

} // namespace cvd
