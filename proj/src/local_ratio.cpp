#include "cvd/local_ratio.hpp"

#include <algorithm>
#include <variant>

#include "cvd/goodness.hpp"

namespace cvd {

Rational lambda_star(std::span<const Rational> c, std::span<const std::int64_t> c_h) {
    if (c.size() != c_h.size()) throw ContractViolation("lambda_star: cost vectors differ in length");
    bool have = false;
    Rational best;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c_h[i] < 0) throw ContractViolation("lambda_star: negative local cost");
        if (c_h[i] == 0) continue;
        if (sgn(c[i]) <= 0) throw ContractViolation("lambda_star: vertex " + std::to_string(i) + " has no cost left");
        Rational ratio = c[i] / Rational(static_cast<long>(c_h[i]));
        if (!have || ratio < best) best = ratio;
        have = true;
    }
    if (!have) throw ContractViolation("lambda_star: local cost function is identically zero");
    return best;
}

Contraction contract_twins(const Graph& g, const CostFn& c, Vertex u, Vertex u2) {
    if (u >= g.order() || u2 >= g.order() || u == u2 || !g.adjacent(u, u2) ||
        g.closed_neighbors(u) != g.closed_neighbors(u2))
        throw ContractViolation("contract_twins: " + std::to_string(u) + " and " + std::to_string(u2) + " are not true twins");
    if (c.size() != g.order()) throw ContractViolation("contract_twins: cost vector has wrong length");
    Bitset keep = g.all_vertices();
    keep.reset(u2);
    Contraction out{induced(g, keep), {}};
    std::vector<Rational> costs;
    for (Vertex h : out.reduced.to_host) costs.push_back(h == u ? c[u] + c[u2] : c[h]);
    out.costs = CostFn(std::move(costs));
    return out;
}

namespace {

struct ZeroDelete {
    Vertex u;
};
struct Contract {
    Vertex u, u2;
};
using Action = std::variant<ZeroDelete, Contract>;

Vertex max_degree_vertex(const Graph& g, const Bitset& alive) {
    Vertex best = alive.find_first();
    std::size_t best_degree = 0;
    for (auto v = alive.find_first(); v != Bitset::npos; v = alive.find_next(v)) {
        std::size_t d = (g.neighbors(v) & alive).count();
        if (d > best_degree) {
            best = v;
            best_degree = d;
        }
    }
    return best;
}

} // namespace

HittingSet cluster_vd_apx(const Graph& g, const CostFn& c, ApxTrace* trace) {
    const std::size_t n = g.order();
    if (c.size() != n) throw ContractViolation("cluster_vd_apx: cost vector has wrong length");
    ApxTrace local_trace;
    ApxTrace& t = trace ? *trace : local_trace;
    t = ApxTrace{};

    std::vector<Rational> cost(c.values().begin(), c.values().end());
    Bitset alive = g.all_vertices();
    std::vector<Action> stack;

    while (!is_cluster(g, alive)) {
        Vertex zero = Bitset::npos;
        for (auto v = alive.find_first(); v != Bitset::npos; v = alive.find_next(v))
            if (sgn(cost[v]) == 0) {
                zero = v;
                break;
            }
        if (zero != Bitset::npos) {
            alive.reset(zero);
            stack.push_back(ZeroDelete{zero});
            ++t.zero_deletions;
            continue;
        }
        if (auto twins = least_twin_pair(g, alive)) {
            auto [u, u2] = *twins;
            cost[u] += cost[u2];
            cost[u2] = 0;
            alive.reset(u2);
            stack.push_back(Contract{u, u2});
            ++t.contractions;
            continue;
        }

        const Vertex v0 = max_degree_vertex(g, alive);
        auto ball = induced(g, ball2(g, v0, alive));
        GoodCertificate cert = find_2good_local(ball.graph, ball.local(v0));
        const VertexList hosts = ball.lift(cert.vertices);
        std::vector<Rational> local_cost;
        local_cost.reserve(hosts.size());
        for (Vertex h : hosts) local_cost.push_back(cost[h]);
        const Rational lambda = lambda_star(local_cost, cert.costs);
        bool zeroed = false;
        for (std::size_t i = 0; i < hosts.size(); ++i) {
            cost[hosts[i]] -= lambda * Rational(static_cast<long>(cert.costs[i]));
            if (sgn(cost[hosts[i]]) < 0) throw InvariantViolation("cluster_vd_apx: subtraction produced a negative cost");
            zeroed = zeroed || sgn(cost[hosts[i]]) == 0;
        }
        if (!zeroed) throw InvariantViolation("cluster_vd_apx: subtraction produced no zero-cost vertex");
        ++t.subtractions;
        t.largest_local = std::max(t.largest_local, hosts.size());
    }

    Bitset chosen(n);
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
        if (const auto* z = std::get_if<ZeroDelete>(&*it)) {
            alive.set(z->u);
            if (!is_cluster(g, alive - chosen)) {
                chosen.set(z->u);
                ++t.reinsertions;
            }
        } else {
            const auto& k = std::get<Contract>(*it);
            alive.set(k.u2);
            if (chosen.test(k.u)) chosen.set(k.u2);
        }
    }

    HittingSet hs;
    hs.vertices = to_list(chosen);
    hs.cost = c.total(hs.vertices);
    auto check = validate(g, c, hs.vertices);
    if (!check.is_hitting) throw InvariantViolation("cluster_vd_apx: output is not a hitting set");
    hs.minimal = check.is_minimal;
    return hs;
}

} // namespace cvd
