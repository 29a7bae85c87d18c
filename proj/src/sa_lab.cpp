#include "cvd/sa_lab.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <sstream>

#include "cvd/exact.hpp"

namespace cvd {

std::string SaVar::name() const {
    return pair ? "x" + std::to_string(a) + "_" + std::to_string(b) : "x" + std::to_string(a);
}

std::size_t LinearProgram::pair(Vertex u, Vertex v) const {
    if (level < 1) throw ContractViolation("pair variable requested from a level-0 program");
    if (u == v || u >= order || v >= order) throw ContractViolation("pair variable needs two distinct vertices");
    if (u > v) std::swap(u, v);
    // Pairs (u, v) are listed row by row: (0,1)..(0,n-1), (1,2), ...
    const std::size_t before = u * order - u * (u + 1) / 2;
    return order + before + (v - u - 1);
}

namespace {

std::string triple(const std::array<Vertex, 3>& t) {
    return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

void add_row(LinearProgram& lp, std::vector<std::pair<std::size_t, Rational>> terms, Rational rhs, std::string label) {
    lp.rows.push_back({std::move(terms), std::move(rhs), std::move(label)});
}

} // namespace

LinearProgram build_sa(const Graph& g, int r, Type1Rows type1) {
    if (r != 0 && r != 1) throw ContractViolation("build_sa: only levels 0 and 1 are supported");
    const std::size_t n = g.order();
    LinearProgram lp;
    lp.order = n;
    lp.level = r;
    for (Vertex v = 0; v < n; ++v) lp.vars.push_back({v, v, false});
    if (r == 1)
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) lp.vars.push_back({u, v, true});

    const Rational one(1), minus(-1);
    for (const auto& p : all_p3s(g)) {
        const auto t = p.sorted();
        if (r == 0) {
            add_row(lp, {{t[0], one}, {t[1], one}, {t[2], one}}, one, "cover(" + triple(t) + ")");
            continue;
        }
        std::vector<Vertex> centres{p.mid};
        if (type1 == Type1Rows::EveryLabeling) centres.assign(t.begin(), t.end());
        for (Vertex v : centres) {
            std::vector<std::pair<std::size_t, Rational>> terms{{t[0], one}, {t[1], one}, {t[2], one}};
            for (Vertex u : t)
                if (u != v) terms.emplace_back(lp.pair(u, v), minus);
            add_row(lp, std::move(terms), one, "p3(" + triple(t) + ";" + std::to_string(v) + ")");
        }
        for (Vertex z = 0; z < n; ++z) {
            if (z == t[0] || z == t[1] || z == t[2]) continue;
            std::vector<std::pair<std::size_t, Rational>> lower, upper;
            for (Vertex u : t) lower.emplace_back(lp.pair(u, z), one);
            lower.emplace_back(z, minus);
            add_row(lp, std::move(lower), Rational(0), "lift(" + triple(t) + "|" + std::to_string(z) + ")");
            for (Vertex u : t) upper.emplace_back(u, one);
            upper.emplace_back(z, one);
            for (Vertex u : t) upper.emplace_back(lp.pair(u, z), minus);
            add_row(lp, std::move(upper), one, "cover(" + triple(t) + "|" + std::to_string(z) + ")");
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        add_row(lp, {{v, one}}, Rational(0), "lb(" + std::to_string(v) + ")");
        add_row(lp, {{v, minus}}, minus, "ub(" + std::to_string(v) + ")");
    }
    if (r == 1)
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                const std::size_t uv = lp.pair(u, v);
                const std::string tag = std::to_string(u) + "," + std::to_string(v);
                add_row(lp, {{uv, one}}, Rational(0), "lb(" + tag + ")");
                add_row(lp, {{u, one}, {uv, minus}}, Rational(0), "ub(" + tag + ";" + std::to_string(u) + ")");
                add_row(lp, {{v, one}, {uv, minus}}, Rational(0), "ub(" + tag + ";" + std::to_string(v) + ")");
            }
    return lp;
}

void attach_objective(LinearProgram& lp, const CostFn& c) {
    if (c.size() != lp.order) throw ContractViolation("attach_objective: cost vector has wrong length");
    lp.objective.assign(lp.vars.size(), Rational(0));
    for (Vertex v = 0; v < lp.order; ++v) lp.objective[v] = c[v];
}

LpSolution lp_min(const LinearProgram& lp, const CostFn& c) {
    if (c.size() != lp.order) throw ContractViolation("lp_min: cost vector has wrong length");
    // Rows of the form x_j >= 0 are implicit in the solver and dropped here.
    auto is_sign_row = [](const LpRow& row) {
        return row.terms.size() == 1 && row.terms[0].second == 1 && sgn(row.rhs) == 0;
    };
    LpProblem p;
    p.num_vars = lp.vars.size();
    p.objective.assign(p.num_vars, Rational(0));
    for (Vertex v = 0; v < lp.order; ++v) p.objective[v] = c[v];
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        if (is_sign_row(lp.rows[i])) continue;
        kept.push_back(i);
        p.rows.push_back(lp.rows[i].terms);
        p.rhs.push_back(lp.rows[i].rhs);
    }
    const SimplexResult res = simplex_min(p);
    LpSolution out;
    out.status = res.status;
    if (res.status != LpStatus::Optimal)
        throw InvariantViolation("lp_min: relaxation reported infeasible, which cannot happen with nonnegative costs");
    out.values = res.x;
    out.objective = res.value;

    // Dual values of the dropped sign rows are the reduced costs c - A^T y.
    out.duals.assign(lp.rows.size(), Rational(0));
    std::vector<Rational> reduced = p.objective;
    for (std::size_t k = 0; k < kept.size(); ++k) {
        out.duals[kept[k]] = res.duals[k];
        for (const auto& [j, a] : p.rows[k]) reduced[j] -= a * res.duals[k];
    }
    std::vector<bool> used(p.num_vars, false);
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        if (!is_sign_row(lp.rows[i])) continue;
        const std::size_t j = lp.rows[i].terms[0].first;
        if (!used[j]) out.duals[i] = reduced[j];
        used[j] = true;
    }
    if (auto bad = first_violated_row(lp, out.values))
        throw InvariantViolation("lp_min: optimum violates row " + lp.rows[*bad].label);
    return out;
}

std::optional<std::size_t> first_violated_row(const LinearProgram& lp, const std::vector<Rational>& values) {
    if (values.size() != lp.vars.size()) throw ContractViolation("point has wrong number of coordinates");
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
        Rational lhs = 0;
        for (const auto& [j, a] : lp.rows[i].terms) lhs += a * values[j];
        if (lhs < lp.rows[i].rhs) return i;
    }
    return std::nullopt;
}

GapResult integrality_gap(const Graph& g, const CostFn& c, int r, Type1Rows type1) {
    GapResult out;
    out.opt = exact_opt(g, c);
    out.lp = lp_min(build_sa(g, r, type1), c).objective;
    if (out.lp > out.opt) throw InvariantViolation("integrality_gap: relaxation value exceeds the integer optimum");
    if (sgn(out.opt) == 0)
        out.gap = Rational(1);
    else if (sgn(out.lp) > 0)
        out.gap = Rational(out.opt / out.lp);
    return out;
}

std::optional<VertexList> shortest_cycle(const Graph& g) {
    const std::size_t n = g.order();
    std::optional<VertexList> best;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    for (Vertex s = 0; s < n; ++s) {
        std::vector<std::size_t> dist(n, none), parent(n, none);
        std::queue<Vertex> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            if (best && 2 * dist[u] + 1 >= best->size()) break;
            const auto& nb = g.neighbors(u);
            for (auto w = nb.find_first(); w != Bitset::npos; w = nb.find_next(w)) {
                if (dist[w] == none) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u] && (!best || dist[u] + dist[w] + 1 < best->size())) {
                    VertexList left, right;
                    for (Vertex x = u; x != none; x = parent[x]) left.push_back(x);
                    for (Vertex x = w; x != s; x = parent[x]) right.push_back(x);
                    std::reverse(left.begin(), left.end());
                    left.insert(left.end(), right.begin(), right.end());
                    best = std::move(left);
                }
            }
        }
    }
    return best;
}

std::optional<std::size_t> girth(const Graph& g) {
    auto cycle = shortest_cycle(g);
    if (!cycle) return std::nullopt;
    return cycle->size();
}

LbPoint lb_point(const Graph& g, Type1Rows type1) {
    if (auto cycle = shortest_cycle(g); cycle && cycle->size() < 5)
        throw PreconditionError("lb_point: girth " + std::to_string(cycle->size()) + " < 5, short cycle " + format_vertices(*cycle));
    LbPoint out;
    out.program = build_sa(g, 1, type1);
    attach_objective(out.program, CostFn::unit(g.order()));
    out.values.assign(out.program.vars.size(), Rational(0));
    for (std::size_t j = 0; j < out.program.vars.size(); ++j) {
        const SaVar& var = out.program.vars[j];
        if (!var.pair)
            out.values[j] = Rational(2, 5);
        else
            out.values[j] = g.adjacent(var.a, var.b) ? Rational(0) : Rational(1, 5);
    }
    out.violated_row = first_violated_row(out.program, out.values);
    for (std::size_t j = 0; j < out.values.size(); ++j) out.objective += out.program.objective[j] * out.values[j];
    return out;
}

std::vector<std::pair<Vertex, Vertex>> diagonals(const Graph& g) {
    const std::size_t n = g.order();
    std::set<std::pair<Vertex, Vertex>> found;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            VertexList completions;
            for (Vertex a = 0; a < n; ++a)
                if (a != u && a != v && is_p3(g, u, v, a)) completions.push_back(a);
            for (std::size_t i = 0; i < completions.size(); ++i)
                for (std::size_t k = i + 1; k < completions.size(); ++k) found.emplace(completions[i], completions[k]);
        }
    return {found.begin(), found.end()};
}

std::optional<DiagonalCounterexample> diagonal_scan(const Graph& g, const LinearProgram& lp, const std::vector<Rational>& values) {
    if (lp.order != g.order() || values.size() != lp.vars.size()) throw ContractViolation("diagonal_scan: point does not match the graph");
    const auto diag = diagonals(g);
    const Rational threshold(2, 5);
    for (const auto& p : all_p3s(g)) {
        const auto t = p.sorted();
        std::optional<std::pair<Vertex, Vertex>> inside;
        for (int i = 0; i < 3 && !inside; ++i)
            for (int k = i + 1; k < 3 && !inside; ++k)
                if (std::binary_search(diag.begin(), diag.end(), std::make_pair(t[i], t[k]))) inside = std::make_pair(t[i], t[k]);
        if (!inside) continue;
        if (std::none_of(t.begin(), t.end(), [&](Vertex v) { return values[lp.singleton(v)] >= threshold; }))
            return DiagonalCounterexample{p, *inside};
    }
    return std::nullopt;
}

std::string to_lp_text(const LinearProgram& lp) {
    std::ostringstream out;
    auto term = [&](const Rational& a, const std::string& name, bool first) {
        if (sgn(a) < 0)
            out << (first ? "- " : " - ");
        else if (!first)
            out << " + ";
        Rational mag = abs(a);
        if (mag != 1) out << to_string(mag) << " ";
        out << name;
    };
    out << "\\ Sherali-Adams level " << lp.level << " relaxation, " << lp.order << " vertices\n";
    out << "Minimize\n obj:";
    bool first = true;
    for (std::size_t j = 0; j < lp.objective.size(); ++j) {
        if (sgn(lp.objective[j]) == 0) continue;
        if (first) out << " ";
        term(lp.objective[j], lp.vars[j].name(), first);
        first = false;
    }
    if (first) out << " 0 " << (lp.vars.empty() ? "x" : lp.vars[0].name());
    out << "\nSubject To\n";
    for (const auto& row : lp.rows) {
        std::string name = row.label;
        for (char& ch : name)
            if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
        while (!name.empty() && name.back() == '_') name.pop_back();
        out << " " << name << ": ";
        bool f = true;
        for (const auto& [j, a] : row.terms) {
            term(a, lp.vars[j].name(), f);
            f = false;
        }
        out << " >= " << to_string(row.rhs) << "\n";
    }
    out << "Bounds\n";
    for (const auto& v : lp.vars) out << " 0 <= " << v.name() << " <= 1\n";
    out << "End\n";
    return out.str();
}

} // namespace cvd
