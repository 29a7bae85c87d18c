#include <gtest/gtest.h>

#include "cvd/generators.hpp"
#include "cvd/sa_lab.hpp"
#include "support/brute.hpp"
#include "support/enumerate.hpp"

using namespace cvd;

namespace {

Graph make(std::size_t n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

std::size_t count_prefix(const LinearProgram& lp, const std::string& prefix) {
    std::size_t k = 0;
    for (const auto& row : lp.rows) k += row.label.rfind(prefix, 0) == 0;
    return k;
}

Rational q(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

Rational lp_value(const Graph& g, int r, Type1Rows mode = Type1Rows::EveryLabeling) {
    return lp_min(build_sa(g, r, mode), CostFn::unit(g.order())).objective;
}

} // namespace

TEST(Build, PathLevelZero) {
    auto lp = build_sa(path_graph(3), 0);
    EXPECT_EQ(lp.vars.size(), 3u);
    EXPECT_EQ(lp.rows.size(), 7u);
    EXPECT_EQ(count_prefix(lp, "cover"), 1u);
}

TEST(Build, PathLevelOne) {
    auto lp = build_sa(path_graph(3), 1, Type1Rows::Middle);
    EXPECT_EQ(lp.vars.size(), 6u);
    EXPECT_EQ(count_prefix(lp, "p3"), 1u);
    EXPECT_EQ(count_prefix(lp, "lift"), 0u);
    EXPECT_EQ(count_prefix(lp, "cover"), 0u);
    EXPECT_EQ(count_prefix(lp, "lb("), 3u + 3u);
    EXPECT_EQ(count_prefix(lp, "ub("), 3u + 6u);
    // The pair terms are the two edges of the path.
    const auto& row = lp.rows[0];
    ASSERT_EQ(row.terms.size(), 5u);
    EXPECT_EQ(row.terms[3].first, lp.pair(0, 1));
    EXPECT_EQ(row.terms[4].first, lp.pair(1, 2));
    auto all = build_sa(path_graph(3), 1);
    EXPECT_EQ(all.rows.size(), lp.rows.size() + 2);
    EXPECT_EQ(count_prefix(all, "p3"), 3u);
}

TEST(Build, FiveCycleCoveringRows) { EXPECT_EQ(count_prefix(build_sa(cycle_graph(5), 0), "cover"), 5u); }

TEST(Build, PairIndexing) {
    auto lp = build_sa(cycle_graph(5), 1);
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v) {
            const SaVar& var = lp.vars[lp.pair(u, v)];
            EXPECT_TRUE(var.pair);
            EXPECT_EQ(var.a, u);
            EXPECT_EQ(var.b, v);
            EXPECT_EQ(lp.pair(v, u), lp.pair(u, v));
        }
    EXPECT_THROW(build_sa(cycle_graph(5), 0).pair(0, 1), ContractViolation);
    EXPECT_THROW(build_sa(cycle_graph(5), 2), ContractViolation);
}

TEST(LpMin, CyclesAtLevelZero) {
    for (std::size_t n = 4; n <= 9; ++n) {
        auto sol = lp_min(build_sa(cycle_graph(n), 0), CostFn::unit(n));
        EXPECT_EQ(sol.objective, q(static_cast<long>(n), 3)) << n;
    }
    auto sol = lp_min(build_sa(cycle_graph(5), 0), CostFn::unit(5));
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(sol.values[v], Rational(1, 3));
}

TEST(LpMin, PathsAreIntegral) {
    EXPECT_EQ(lp_value(path_graph(5), 0), 1);
    EXPECT_EQ(lp_value(path_graph(7), 0), 2);
    for (std::size_t n = 1; n <= 10; ++n) {
        auto sol = lp_min(build_sa(path_graph(n), 0), CostFn::unit(n));
        EXPECT_EQ(sol.objective, ref::brute_opt(path_graph(n), CostFn::unit(n))) << n;
        EXPECT_TRUE(is_integer(sol.objective));
    }
}

TEST(LpMin, EmptyGraph) { EXPECT_EQ(lp_value(make(4, {}), 0), 0); }

TEST(LpMin, DualCertificateIsValid) {
    for (int r : {0, 1}) {
        Graph g = r == 0 ? petersen_graph() : figure3_graph();
        auto lp = build_sa(g, r);
        CostFn c = CostFn::unit(g.order());
        auto sol = lp_min(lp, c);
        ASSERT_EQ(sol.status, LpStatus::Optimal);
        ASSERT_FALSE(first_violated_row(lp, sol.values));
        std::vector<Rational> aty(lp.vars.size());
        Rational by = 0;
        for (std::size_t i = 0; i < lp.rows.size(); ++i) {
            EXPECT_GE(sol.duals[i], 0);
            by += sol.duals[i] * lp.rows[i].rhs;
            for (const auto& [j, a] : lp.rows[i].terms) aty[j] += a * sol.duals[i];
        }
        for (std::size_t j = 0; j < lp.vars.size(); ++j) EXPECT_EQ(aty[j], j < g.order() ? c[j] : Rational(0)) << j;
        EXPECT_EQ(by, sol.objective);
    }
}

TEST(LpMin, WeightedValuesStayBelowOptimum) {
    Graph g = figure3_graph();
    CostFn c(std::vector<Rational>{6, 1, 1, 1, 1, 3, 3, 3});
    Rational s0 = lp_min(build_sa(g, 0), c).objective;
    Rational s1 = lp_min(build_sa(g, 1), c).objective;
    EXPECT_LE(s0, s1);
    EXPECT_LE(s1, ref::brute_opt(g, c));
}

TEST(Gap, FiveCycle) {
    auto gap = integrality_gap(cycle_graph(5), CostFn::unit(5), 0);
    EXPECT_EQ(gap.opt, 2);
    EXPECT_EQ(gap.lp, Rational(5, 3));
    EXPECT_EQ(gap.gap, Rational(6, 5));
}

TEST(Gap, FourCycle) {
    auto gap = integrality_gap(cycle_graph(4), CostFn::unit(4), 0);
    EXPECT_EQ(gap.lp, Rational(4, 3));
    EXPECT_EQ(gap.gap, Rational(3, 2));
}

TEST(Gap, ClusterGraphConvention) {
    auto gap = integrality_gap(make(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}}), CostFn::unit(5), 1);
    EXPECT_EQ(gap.opt, 0);
    EXPECT_EQ(gap.gap, Rational(1));
}

TEST(Gap, MonotoneAndSandwiched) {
    for (std::size_t n = 3; n <= 5; ++n)
        for (const Graph& g : ref::nonisomorphic_graphs(n)) {
            CostFn c = CostFn::unit(n);
            Rational s0 = lp_value(g, 0), s1 = lp_value(g, 1, Type1Rows::Middle), s1all = lp_value(g, 1);
            Rational opt = ref::brute_opt(g, c);
            ASSERT_LE(s0, s1);
            ASSERT_LE(s1, s1all);
            ASSERT_LE(s1all, opt);
        }
}

TEST(Girth, Examples) {
    EXPECT_EQ(girth(cycle_graph(3)), std::optional<std::size_t>{3});
    EXPECT_EQ(girth(petersen_graph()), std::optional<std::size_t>{5});
    EXPECT_EQ(girth(path_graph(6)), std::nullopt);
    auto cycle = shortest_cycle(wheel_graph(7));
    ASSERT_TRUE(cycle);
    EXPECT_EQ(cycle->size(), 3u);
}

TEST(LbPoint, Petersen) {
    auto lb = lb_point(petersen_graph());
    EXPECT_FALSE(lb.violated_row);
    EXPECT_EQ(lb.objective, 4);
}

TEST(LbPoint, FiveCycle) {
    auto lb = lb_point(cycle_graph(5));
    EXPECT_FALSE(lb.violated_row);
    EXPECT_EQ(lb.objective, 2);
    EXPECT_FALSE(lb_point(cycle_graph(5), Type1Rows::Middle).violated_row);
}

TEST(LbPoint, TriangleIsRejected) {
    try {
        lb_point(cycle_graph(3));
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("0 1 2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(lb_point(cycle_graph(4)), PreconditionError);
}

TEST(LbPoint, RandomHighGirthGraphs) {
    int found = 0;
    for (std::uint64_t seed = 0; found < 40 && seed < 20000; ++seed) {
        std::size_t n = 6 + seed % 11;
        Graph g = gnp(n, Rational(1, 4), seed);
        auto gr = girth(g);
        if (gr && *gr < 5) continue;
        auto lb = lb_point(g);
        ASSERT_FALSE(lb.violated_row) << write_graph(g);
        ASSERT_EQ(lb.objective, q(2 * static_cast<long>(n), 5));
        ++found;
    }
    EXPECT_EQ(found, 40);
}

TEST(Diagonals, Diamond) {
    Graph d = make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    // {0,1,3} and {0,2,3} are P3s: (1,2) share {0,3}.
    EXPECT_EQ(diagonals(d), (std::vector<std::pair<Vertex, Vertex>>{{1, 2}}));
    for (auto mode : {Type1Rows::Middle, Type1Rows::EveryLabeling}) {
        auto lp = build_sa(d, 1, mode);
        auto sol = lp_min(lp, CostFn::unit(4));
        EXPECT_FALSE(diagonal_scan(d, lp, sol.values));
        // The 2/5 point of the lower-bound construction is not feasible here, but any
        // feasible point must pass; try the all-halves point.
        std::vector<Rational> half(lp.vars.size(), Rational(1, 2));
        for (std::size_t j = 4; j < half.size(); ++j) half[j] = Rational(1, 4);
        if (!first_violated_row(lp, half)) EXPECT_FALSE(diagonal_scan(d, lp, half));
    }
}

TEST(Diagonals, TriangleFreeWithoutDiagonalsIsVacuous) {
    Graph two = make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    EXPECT_TRUE(diagonals(two).empty());
    auto lp = build_sa(two, 1);
    EXPECT_FALSE(diagonal_scan(two, lp, lp_min(lp, CostFn::unit(6)).values));
    // On P4 the ends form a diagonal, but no P3 contains both.
    EXPECT_EQ(diagonals(path_graph(4)), (std::vector<std::pair<Vertex, Vertex>>{{0, 3}}));
}

TEST(Diagonals, ScanFlagsLowPoints) {
    // In the claw, leaves 1 and 2 are completed by {0, 3}, and 1-0-2 is a P3.
    Graph claw = star_graph(3);
    auto lp = build_sa(claw, 1);
    std::vector<Rational> low(lp.vars.size(), Rational(1, 5));
    auto hit = diagonal_scan(claw, lp, low);
    ASSERT_TRUE(hit);
    EXPECT_EQ(hit->p3.mid, 0u);
    EXPECT_EQ(hit->diagonal, (std::pair<Vertex, Vertex>{1, 2}));
    EXPECT_TRUE(first_violated_row(lp, low).has_value());
    EXPECT_FALSE(diagonal_scan(claw, lp, lp_min(lp, CostFn::unit(4)).values));
}

TEST(Export, LpText) {
    auto lp = build_sa(path_graph(3), 1);
    attach_objective(lp, CostFn(std::vector<Rational>{Rational(1, 2), 1, 3}));
    std::string text = to_lp_text(lp);
    EXPECT_NE(text.find("Minimize\n obj: 1/2 x0 + x1 + 3 x2\n"), std::string::npos) << text;
    EXPECT_NE(text.find(" p3_0_1_2_1: x0 + x1 + x2 - x0_1 - x1_2 >= 1\n"), std::string::npos) << text;
    EXPECT_NE(text.find(" p3_0_1_2_0: x0 + x1 + x2 - x0_1 - x0_2 >= 1\n"), std::string::npos) << text;
    EXPECT_NE(text.find(" ub_0: - x0 >= -1\n"), std::string::npos) << text;
    EXPECT_NE(text.find("Bounds\n 0 <= x0 <= 1\n"), std::string::npos);
    EXPECT_NE(text.find("End\n"), std::string::npos);
}

TEST(Diagonals, MiddleOnlyRowsAreTooWeakForTheDiagonalBound) {
    // With only the middle-vertex rows, some optimal points put every vertex of a
    // diagonal P3 below 2/5; with all labellings none does.
    std::size_t weak = 0;
    for (std::size_t n = 4; n <= 6; ++n)
        for (const Graph& g : ref::nonisomorphic_graphs(n)) {
            auto middle = build_sa(g, 1, Type1Rows::Middle);
            weak += diagonal_scan(g, middle, lp_min(middle, CostFn::unit(n)).values).has_value();
            auto full = build_sa(g, 1);
            ASSERT_FALSE(diagonal_scan(g, full, lp_min(full, CostFn::unit(n)).values)) << write_graph(g);
        }
    EXPECT_GT(weak, 0u);
}
