#include "cvd/simplex.hpp"

#include <numeric>
#include <string>

#include "cvd/types.hpp"

namespace cvd {

namespace {

// Dictionary x_B = beta - alpha x_N, zeta = zeta0 - d . x_N (zeta = -c.x is maximised).
class Dictionary {
public:
    explicit Dictionary(const LpProblem& lp) : m_(lp.rows.size()), n_(lp.num_vars), alpha_(m_ * n_), beta_(m_), d_(lp.objective) {
        basic_.resize(m_);
        nonbasic_.resize(n_);
        std::iota(nonbasic_.begin(), nonbasic_.end(), std::size_t{0});
        for (std::size_t i = 0; i < m_; ++i) {
            basic_[i] = n_ + i;
            beta_[i] = -lp.rhs[i];
            for (const auto& [j, a] : lp.rows[i]) at(i, j) -= a;
        }
    }

    // Returns false when some row has negative value and no entering candidate.
    bool run(std::size_t& pivots) {
        for (;;) {
            std::size_t r = m_;
            for (std::size_t i = 0; i < m_; ++i)
                if (sgn(beta_[i]) < 0 && (r == m_ || basic_[i] < basic_[r])) r = i;
            if (r == m_) return true;
            std::size_t e = n_;
            Rational best;
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(at(r, j)) >= 0) continue;
                Rational ratio = d_[j] / -at(r, j);
                if (e == n_ || ratio < best || (ratio == best && nonbasic_[j] < nonbasic_[e])) {
                    e = j;
                    best = ratio;
                }
            }
            if (e == n_) return false;
            pivot(r, e);
            ++pivots;
        }
    }

    std::vector<Rational> primal() const {
        std::vector<Rational> x(n_);
        for (std::size_t i = 0; i < m_; ++i)
            if (basic_[i] < n_) x[basic_[i]] = beta_[i];
        return x;
    }

    std::vector<Rational> duals() const {
        std::vector<Rational> y(m_);
        for (std::size_t j = 0; j < n_; ++j)
            if (nonbasic_[j] >= n_) y[nonbasic_[j] - n_] = d_[j];
        return y;
    }

private:
    Rational& at(std::size_t i, std::size_t j) { return alpha_[i * n_ + j]; }

    void pivot(std::size_t r, std::size_t e) {
        const Rational p = at(r, e);
        beta_[r] /= p;
        for (std::size_t k = 0; k < n_; ++k) at(r, k) = k == e ? Rational(1) / p : Rational(at(r, k) / p);
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r) continue;
            const Rational f = at(i, e);
            if (sgn(f) == 0) continue;
            beta_[i] -= f * beta_[r];
            for (std::size_t k = 0; k < n_; ++k) at(i, k) = k == e ? Rational(-f * at(r, e)) : Rational(at(i, k) - f * at(r, k));
        }
        const Rational f = d_[e];
        if (sgn(f) != 0)
            for (std::size_t k = 0; k < n_; ++k) d_[k] = k == e ? Rational(-f * at(r, e)) : Rational(d_[k] - f * at(r, k));
        std::swap(basic_[r], nonbasic_[e]);
    }

    std::size_t m_, n_;
    std::vector<Rational> alpha_, beta_, d_;
    std::vector<std::size_t> basic_, nonbasic_;
};

void check_shape(const LpProblem& lp) {
    if (lp.objective.size() != lp.num_vars) throw ContractViolation("simplex: objective has wrong length");
    if (lp.rhs.size() != lp.rows.size()) throw ContractViolation("simplex: row and rhs counts differ");
    for (const auto& row : lp.rows)
        for (const auto& [j, a] : row)
            if (j >= lp.num_vars) throw ContractViolation("simplex: column index out of range");
    for (const auto& c : lp.objective)
        if (sgn(c) < 0) throw ContractViolation("simplex: objective has a negative coefficient");
}

void certify(const LpProblem& lp, const SimplexResult& res) {
    Rational primal = 0, dual = 0;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        if (sgn(res.x[j]) < 0) throw InvariantViolation("simplex: negative primal value");
        primal += lp.objective[j] * res.x[j];
    }
    std::vector<Rational> aty(lp.num_vars);
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        Rational lhs = 0;
        for (const auto& [j, a] : lp.rows[i]) {
            lhs += a * res.x[j];
            aty[j] += a * res.duals[i];
        }
        if (lhs < lp.rhs[i]) throw InvariantViolation("simplex: row " + std::to_string(i) + " violated");
        if (sgn(res.duals[i]) < 0) throw InvariantViolation("simplex: negative dual value");
        dual += lp.rhs[i] * res.duals[i];
    }
    for (std::size_t j = 0; j < lp.num_vars; ++j)
        if (aty[j] > lp.objective[j]) throw InvariantViolation("simplex: dual constraint " + std::to_string(j) + " violated");
    if (primal != dual || primal != res.value) throw InvariantViolation("simplex: primal and dual objectives differ");
}

} // namespace

SimplexResult simplex_min(const LpProblem& lp) {
    check_shape(lp);
    Dictionary dict(lp);
    SimplexResult res;
    if (!dict.run(res.pivots)) {
        res.status = LpStatus::Infeasible;
        return res;
    }
    res.status = LpStatus::Optimal;
    res.x = dict.primal();
    res.duals = dict.duals();
    for (std::size_t j = 0; j < lp.num_vars; ++j) res.value += lp.objective[j] * res.x[j];
    certify(lp, res);
    return res;
}

} // namespace cvd
