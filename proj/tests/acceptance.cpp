// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include "cvd/cli.hpp"
#include "cvd/exact.hpp"
#include "cvd/generators.hpp"
#include "cvd/goodness.hpp"
#include "cvd/io.hpp"
#include "cvd/local_ratio.hpp"
#include "cvd/sa_lab.hpp"
#include "support/brute.hpp"
#include "support/enumerate.hpp"

using namespace cvd;
namespace fs = std::filesystem;

namespace {

// Collects the first few failure messages of one criterion.
struct Outcome {
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first;

    void fail(const std::string& what) {
        if (!failures++) first = what;
    }
    void expect(bool ok, const std::function<std::string()>& what) {
        ++checked;
        if (!ok) fail(what());
    }
};

std::string show(const Graph& g) {
    std::string s = write_graph(g);
    for (char& ch : s)
        if (ch == '\n') ch = ';';
    return s;
}

std::string show(const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

void check_apx(Outcome& o, const Graph& g, const CostFn& c) {
    HittingSet hs = cluster_vd_apx(g, c);
    Rational opt = cluster_vd_exact(g, c).cost;
    Validation val = validate(g, c, hs.vertices);
    o.expect(val.is_hitting && val.is_minimal && ref::brute_minimal_hitting(g, hs.vertices) && hs.cost == val.cost && hs.cost <= 2 * opt,
             [&] { return "apx cost " + to_string(hs.cost) + " vs opt " + to_string(opt) + " on " + show(g) + " costs " + write_costs(c); });
}

Outcome criterion1() {
    Outcome o;
    for (std::size_t n = 1; n <= 6; ++n) ref::for_each_labeled(n, [&](const Graph& g) { check_apx(o, g, CostFn::unit(n)); });
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> order(7, 14);
    std::uniform_int_distribution<std::int64_t> cost(0, 10);
    std::uniform_int_distribution<int> density(1, 9);
    for (int i = 0; i < 10000; ++i) {
        std::size_t n = order(rng);
        Graph g = gnp(n, Rational(density(rng), 10), rng());
        std::vector<std::int64_t> w(n);
        for (auto& x : w) x = cost(rng);
        check_apx(o, g, CostFn::from_integers(w));
    }
    return o;
}

void check_root(Outcome& o, const Graph& g, Vertex v0) {
    try {
        GoodCertificate cert = find_2good(g, v0);
        CertificateCheck check = check_certificate(g, cert);
        o.expect(check.ok, [&] { return "root " + std::to_string(v0) + " on " + show(g) + ": " + check.reason; });
    } catch (const std::exception& e) {
        ++o.checked;
        o.fail("root " + std::to_string(v0) + " on " + show(g) + " threw: " + e.what());
    }
}

Outcome criterion2() {
    Outcome o;
    auto eligible = [](const Graph& g) { return ref::connected(g) && twin_classes(g).twin_free(); };
    for (std::size_t n = 1; n <= 6; ++n)
        ref::for_each_labeled(n, [&](const Graph& g) {
            if (eligible(g))
                for (Vertex v = 0; v < n; ++v) check_root(o, g, v);
        });
    for (const Graph& g : ref::nonisomorphic_graphs(7))
        if (eligible(g))
            for (Vertex v = 0; v < 7; ++v) check_root(o, g, v);
    return o;
}

Outcome criterion3() {
    Outcome o;
    const std::vector<std::int64_t> fig3{6, 1, 1, 1, 1, 3, 3, 3};
    GoodCertificate base = base_case_certificate(figure3_graph(), 0);
    o.expect(base.costs == fig3 && base.kind == GoodnessKind::Central, [&] { return "figure 3 costs " + show(base.costs); });
    GoodCertificate full3 = find_2good(figure3_graph(), 0);
    o.expect(full3.costs == fig3, [&] { return "figure 3 via find_2good " + show(full3.costs); });

    const std::vector<std::int64_t> fig4{1, 1, 1, 1, 1, 2};
    Graph g4 = figure4_graph();
    PeelResult peeled = peel_vertex(g4, 0, 5);
    std::vector<std::int64_t> lifted = lift_cost(peeled.step, base_case_certificate(peeled.reduced, 0).costs);
    o.expect(lifted == fig4 && lifted[peeled.step.peeled] == 2, [&] { return "figure 4 peel+lift " + show(lifted); });
    GoodCertificate full4 = find_2good(g4, 0);
    o.expect(full4.costs == fig4 && full4.vertices.size() == 6, [&] { return "figure 4 via find_2good " + show(full4.costs); });
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (std::size_t k = 5; k <= 10; ++k) {
        Graph w = wheel_graph(k);
        Hole rim;
        for (Vertex v = 1; v < k; ++v) rim.cycle.push_back(v);
        GoodCertificate cert = wheel_certificate(w, rim, 0);
        const std::int64_t want = static_cast<std::int64_t>(k) - 3;
        Rational opt = exact_opt(w, CostFn::from_integers(cert.costs));
        o.expect(cert.total() == 2 * want && opt == want,
                 [&] { return "W_" + std::to_string(k) + " total " + std::to_string(cert.total()) + " opt " + to_string(opt); });
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    Graph g = two_p3_apex();
    GoodCertificate cert = two_p3_certificate(g, TwoP3{P3Witness{2, {1, 3}}, P3Witness{5, {4, 6}}}, 0);
    Rational opt = exact_opt(g, CostFn::from_integers(cert.costs));
    o.expect(cert.total() == 8 && opt == 4, [&] { return "total " + std::to_string(cert.total()) + " opt " + to_string(opt); });
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (std::size_t n = 4; n <= 9; ++n) {
        LpSolution s = lp_min(build_sa(cycle_graph(n), 0), CostFn::unit(n));
        Rational want(static_cast<long>(n), 3L);
        want.canonicalize();
        o.expect(s.status == LpStatus::Optimal && s.objective == want, [&] { return "C_" + std::to_string(n) + " lp " + to_string(s.objective); });
    }
    for (std::size_t n = 1; n <= 10; ++n) {
        Graph p = path_graph(n);
        LpSolution s = lp_min(build_sa(p, 0), CostFn::unit(n));
        bool integral = is_integer(s.objective);
        for (const auto& x : s.values) integral = integral && is_integer(x);
        Rational opt = exact_opt(p, CostFn::unit(n));
        o.expect(s.status == LpStatus::Optimal && integral && s.objective == opt,
                 [&] { return "P_" + std::to_string(n) + " lp " + to_string(s.objective) + " opt " + to_string(opt); });
    }
    return o;
}

// Checked for both row sets; the middle-only system is weaker, so its gap bounds the other.
Outcome criterion7(Rational& worst_all, Rational& worst_middle) {
    Outcome o;
    const Rational bound(5, 2);
    for (auto [mode, worst] : {std::pair{Type1Rows::EveryLabeling, &worst_all}, std::pair{Type1Rows::Middle, &worst_middle}}) {
        *worst = 0;
        for (std::size_t n = 1; n <= 6; ++n)
            for (const Graph& g : ref::nonisomorphic_graphs(n)) {
                GapResult r = integrality_gap(g, CostFn::unit(n), 1, mode);
                o.expect(r.gap && *r.gap <= bound, [&] { return "gap " + (r.gap ? to_string(*r.gap) : std::string("inf")) + " on " + show(g); });
                if (r.gap && *r.gap > *worst) *worst = *r.gap;
            }
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    LbPoint pet = lb_point(petersen_graph());
    o.expect(!pet.violated_row && pet.objective == 4, [&] { return "Petersen objective " + to_string(pet.objective); });
    LbPoint c5 = lb_point(cycle_graph(5));
    o.expect(!c5.violated_row && c5.objective == 2, [&] { return "C5 objective " + to_string(c5.objective); });
    bool refused = false;
    try {
        lb_point(cycle_graph(3));
    } catch (const PreconditionError&) {
        refused = true;
    }
    o.expect(refused, [] { return "K3 accepted"; });
    return o;
}

Outcome criterion9() {
    Outcome o;
    for (std::size_t n = 1; n <= 8; ++n)
        for (const Graph& g : ref::nonisomorphic_graphs(n)) {
            CostFn unit = CostFn::unit(n);
            Rational a = cluster_vd_exact(g, unit).cost, b = cluster_vd_branching(g, unit);
            o.expect(a == b, [&] { return "oracle " + to_string(a) + " branching " + to_string(b) + " on " + show(g); });
        }
    return o;
}

std::string strip_timing(const std::string& text) {
    static const std::regex line("^time[^\n]*\n", std::regex::multiline);
    static const std::regex token(" time_ms=[0-9.]+");
    return std::regex_replace(std::regex_replace(text, line, ""), token, "");
}

Outcome criterion10() {
    Outcome o;
    fs::path dir = fs::temp_directory_path() / "cvd_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir / "corpus");
    auto put = [&](const std::string& name, const Graph& g) {
        std::string p = (dir / name).string();
        write_file(p, write_graph(g));
        return p;
    };
    std::string f3 = put("figure3.txt", figure3_graph());
    std::string rnd = put("gnp.txt", gnp(12, Rational(1, 2), 7));
    std::string big = put("big.txt", gnp(200, Rational(1, 4), 7));
    std::string costs = (dir / "costs.txt").string();
    write_file(costs, "0 3\n1 1/2\n5 7\n");
    for (std::size_t n : {20, 40, 60}) put("corpus/g" + std::to_string(n) + ".txt", gnp(n, Rational(1, 2), n));
    std::string lp = (dir / "out.lp").string();

    const std::vector<std::vector<std::string>> commands{
        {"solve", rnd, "--seed", "7", "--verify"},
        {"solve", rnd, "--seed", "7", "--costs", costs},
        {"solve", big, "--seed", "7"},
        {"exact", rnd, "--seed", "7", "--verify"},
        {"certify", f3, "--root", "0", "--seed", "7", "--verify"},
        {"certify", rnd, "--root", "3", "--seed", "7"},
        {"gap", f3, "--r", "0", "--seed", "7"},
        {"gap", f3, "--r", "1", "--seed", "7", "--lp", lp},
        {"gen", "gnp", "--n", "30", "--p", "1/3", "--seed", "7"},
        {"gen", "wheel", "--k", "8", "--seed", "7"},
        {"bench", (dir / "corpus").string(), "--seed", "7", "--verify"},
    };
    for (const auto& args : commands) {
        std::string outputs[2];
        std::string lp_text[2];
        int codes[2];
        for (int i = 0; i < 2; ++i) {
            std::ostringstream out, err;
            codes[i] = run_cli(args, out, err);
            outputs[i] = strip_timing(out.str()) + err.str();
            if (fs::exists(lp)) lp_text[i] = read_file(lp);
        }
        std::string joined;
        for (const auto& a : args) joined += " " + a;
        o.expect(codes[0] == codes[1] && outputs[0] == outputs[1] && lp_text[0] == lp_text[1] && !outputs[0].empty(),
                 [&] { return "cvd" + joined + " differs between runs"; });
    }
    fs::remove_all(dir);
    return o;
}

bool report(int id, const std::string& title, const std::function<Outcome()>& run, const std::string& extra = "") {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = run();
    } catch (const std::exception& e) {
        o.fail(std::string("threw: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = o.failures == 0 && o.checked > 0;
    std::cout << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "  " << title << " (" << o.checked << " checks";
    if (o.failures) std::cout << ", " << o.failures << " failed, first: " << o.first;
    if (!extra.empty()) std::cout << ", " << extra;
    std::cout << ", " << std::fixed << std::setprecision(1) << secs << " s)" << std::endl;
    return ok;
}

} // namespace

int main() {
    bool ok = true;
    ok &= report(1, "approximation is a minimal hitting set within twice the optimum", criterion1);
    ok &= report(2, "certificates for connected twin-free graphs, every root", criterion2);
    ok &= report(3, "figure regressions", criterion3);
    ok &= report(4, "wheel certificates", criterion4);
    ok &= report(5, "2P3 certificate", criterion5);
    ok &= report(6, "level-0 relaxation on cycles and paths", criterion6);
    Rational worst_all, worst_middle;
    ok &= report(7, "level-1 integrality gap at most 5/2 for n <= 6", [&] { return criterion7(worst_all, worst_middle); });
    std::cout << "  worst level-1 gap over n <= 6: " << to_string(worst_all) << " (middle-vertex rows only: " << to_string(worst_middle) << ")"
              << std::endl;
    ok &= report(8, "lower-bound point", criterion8);
    ok &= report(9, "exhaustive oracle equals branching solver for n <= 8", criterion9);
    ok &= report(10, "repeated CLI runs are byte-identical apart from timing", criterion10);
    std::cout << (ok ? "ALL PASS" : "SOME FAILED") << std::endl;
    return ok ? 0 : 1;
}
