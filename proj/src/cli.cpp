#include "cvd/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cvd/exact.hpp"
#include "cvd/generators.hpp"
#include "cvd/goodness.hpp"
#include "cvd/io.hpp"
#include "cvd/local_ratio.hpp"
#include "cvd/sa_lab.hpp"

namespace cvd {

namespace {

using Clock = std::chrono::steady_clock;

struct Options {
    std::string graph_file;
    std::string costs_file;
    std::string out_file;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool verify = false;
    int r = 0;
    std::string type1 = "all";
    std::string lp_file;
    std::size_t root = 0;
    std::string kind;
    std::size_t n = 10;
    std::size_t k = 6;
    std::string p = "1/2";
    std::string corpus;
    unsigned jobs = 0;
};

struct Instance {
    Graph g;
    CostFn c;
    std::string id;
};

Instance load(const Options& o) {
    Instance in;
    in.g = parse_graph(read_file(o.graph_file));
    in.c = o.costs_file.empty() ? CostFn::unit(in.g.order()) : parse_costs(read_file(o.costs_file), in.g.order());
    in.id = std::filesystem::path(o.graph_file).filename().string();
    return in;
}

std::string ratio_text(const Rational& cost, const Rational& opt) {
    if (sgn(opt) == 0) return sgn(cost) == 0 ? "1" : "inf";
    return to_string(Rational(cost / opt));
}

void header(Report& r, const Instance& in) {
    r.add("instance", in.id);
    r.add("n", std::to_string(in.g.order()));
    r.add("m", std::to_string(in.g.size()));
}

std::string cmd_solve(const Options& o) {
    Instance in = load(o);
    if (o.verify && in.g.order() > kOracleMaxOrder)
        throw OracleRefusal("--verify needs the exact oracle, which refuses graphs with more than " + std::to_string(kOracleMaxOrder) +
                            " vertices (this one has " + std::to_string(in.g.order()) + ")");
    Report r;
    header(r, in);
    if (o.seed_given) r.add("seed", std::to_string(o.seed));
    r.add("algorithm", "local-ratio");
    auto start = Clock::now();
    ApxTrace trace;
    HittingSet hs = cluster_vd_apx(in.g, in.c, &trace);
    auto elapsed = Clock::now() - start;
    r.add("vertices", format_vertices(hs.vertices));
    r.add("size", std::to_string(hs.vertices.size()));
    r.add("cost", to_string(hs.cost));
    r.add("is_minimal", hs.minimal ? "true" : "false");
    r.add("subtractions", std::to_string(trace.subtractions));
    r.add("contractions", std::to_string(trace.contractions));
    r.add("zero_deletions", std::to_string(trace.zero_deletions));
    if (o.verify) {
        Rational opt = exact_opt(in.g, in.c);
        r.add("opt", to_string(opt));
        r.add("ratio", ratio_text(hs.cost, opt));
        if (hs.cost > 2 * opt) throw InvariantViolation("solve: cost " + to_string(hs.cost) + " exceeds twice the optimum " + to_string(opt));
        if (!hs.minimal) throw InvariantViolation("solve: output is not a minimal hitting set");
    }
    r.add_timing("time_ms", elapsed);
    return r.str();
}

std::string cmd_exact(const Options& o) {
    Instance in = load(o);
    Report r;
    header(r, in);
    r.add("algorithm", "exhaustive");
    auto start = Clock::now();
    HittingSet hs = cluster_vd_exact(in.g, in.c);
    auto elapsed = Clock::now() - start;
    r.add("vertices", format_vertices(hs.vertices));
    r.add("size", std::to_string(hs.vertices.size()));
    r.add("cost", to_string(hs.cost));
    r.add("is_minimal", hs.minimal ? "true" : "false");
    if (o.verify) {
        Rational other = cluster_vd_branching(in.g, in.c);
        r.add("branching_cost", to_string(other));
        if (other != hs.cost) throw InvariantViolation("exact: the two exact solvers disagree");
    }
    r.add_timing("time_ms", elapsed);
    return r.str();
}

std::string cmd_certify(const Options& o) {
    Instance in = load(o);
    if (o.root >= in.g.order()) throw ContractViolation("certify: root " + std::to_string(o.root) + " out of range");
    Report r;
    header(r, in);
    auto start = Clock::now();
    GoodCertificate cert = find_2good(in.g, o.root);
    auto elapsed = Clock::now() - start;
    std::string record = write_certificate(cert);
    std::string text = r.str() + record;
    Report v;
    if (cert.vertices.size() > kOracleMaxOrder) {
        v.add("verdict", "skipped");
        v.add("reason", "certificate has " + std::to_string(cert.vertices.size()) + " vertices, above the oracle limit");
    } else {
        CertificateCheck check = check_certificate(in.g, cert);
        v.add("opt", to_string(check.opt));
        v.add("verdict", check.ok ? "pass" : "fail");
        if (!check.ok) v.add("reason", check.reason);
        if (o.verify && !check.ok) throw InvariantViolation("certify: certificate failed verification: " + check.reason);
    }
    v.add_timing("time_ms", elapsed);
    return text + v.str();
}

std::string cmd_gap(const Options& o) {
    Instance in = load(o);
    Type1Rows mode = o.type1 == "all" ? Type1Rows::EveryLabeling : Type1Rows::Middle;
    Report r;
    header(r, in);
    r.add("level", std::to_string(o.r));
    if (o.r == 1) r.add("type1_rows", o.type1);
    auto start = Clock::now();
    LinearProgram lp = build_sa(in.g, o.r, mode);
    LpSolution sol = lp_min(lp, in.c);
    r.add("variables", std::to_string(lp.vars.size()));
    r.add("rows", std::to_string(lp.rows.size()));
    r.add("lp", to_string(sol.objective));
    Rational opt = exact_opt(in.g, in.c);
    auto elapsed = Clock::now() - start;
    r.add("opt", to_string(opt));
    if (sgn(opt) == 0)
        r.add("gap", "1");
    else if (sgn(sol.objective) == 0)
        r.add("gap", "inf");
    else
        r.add("gap", to_string(Rational(opt / sol.objective)));
    std::string point;
    for (Vertex v = 0; v < in.g.order(); ++v) point += (v ? " " : "") + to_string(sol.values[v]);
    r.add("x", point);
    if (!o.lp_file.empty()) {
        attach_objective(lp, in.c);
        write_file(o.lp_file, to_lp_text(lp));
        r.add("lp_file", o.lp_file);
    }
    r.add_timing("time_ms", elapsed);
    return r.str();
}

std::string cmd_gen(const Options& o) {
    const std::string& kind = o.kind;
    Graph g;
    if (kind == "gnp")
        g = gnp(o.n, parse_rational(o.p), o.seed);
    else if (kind == "path")
        g = path_graph(o.n);
    else if (kind == "cycle")
        g = cycle_graph(o.n);
    else if (kind == "wheel")
        g = wheel_graph(o.k);
    else if (kind == "star")
        g = star_graph(o.k);
    else if (kind == "2p3apex")
        g = two_p3_apex();
    else if (kind == "petersen")
        g = petersen_graph();
    else if (kind == "figure3")
        g = figure3_graph();
    else if (kind == "figure4")
        g = figure4_graph();
    else
        throw ParseError("gen: unknown instance \"" + kind + "\"");
    return write_graph(g);
}

struct BenchRow {
    std::string name;
    bool ok = false;
    std::string message;
    std::size_t n = 0, m = 0;
    Rational cost;
    std::string opt;
    double ms = 0;
};

BenchRow bench_one(const std::filesystem::path& file, bool verify) {
    BenchRow row;
    row.name = file.filename().string();
    try {
        Graph g = parse_graph(read_file(file.string()));
        CostFn c = CostFn::unit(g.order());
        row.n = g.order();
        row.m = g.size();
        auto start = Clock::now();
        HittingSet hs = cluster_vd_apx(g, c);
        row.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        row.cost = hs.cost;
        if (verify && g.order() <= kOracleMaxOrder) {
            Rational opt = exact_opt(g, c);
            row.opt = to_string(opt);
            if (hs.cost > 2 * opt) throw InvariantViolation("ratio above 2");
        }
        row.ok = true;
    } catch (const std::exception& e) {
        row.message = e.what();
    }
    return row;
}

std::string cmd_bench(const Options& o) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(o.corpus)) throw ParseError("bench: " + o.corpus + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.corpus))
        if (entry.is_regular_file()) files.push_back(entry.path());
    if (files.empty()) throw ParseError("bench: corpus " + o.corpus + " is empty");
    std::sort(files.begin(), files.end());

    std::vector<BenchRow> rows(files.size());
    std::atomic<std::size_t> next{0};
    unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, files.size()));
    auto worker = [&] {
        for (std::size_t i; (i = next++) < files.size();) rows[i] = bench_one(files[i], o.verify);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::ostringstream out;
    std::vector<std::pair<double, double>> points;
    std::size_t failed = 0;
    for (const auto& row : rows) {
        out << "row: " << row.name;
        if (row.ok) {
            out << " n=" << row.n << " m=" << row.m << " cost=" << to_string(row.cost);
            if (!row.opt.empty()) out << " opt=" << row.opt;
            out << " status=ok time_ms=" << std::fixed << std::setprecision(3) << row.ms;
            if (row.n > 0 && row.ms > 0) points.emplace_back(std::log(double(row.n)), std::log(row.ms));
        } else {
            ++failed;
            out << " status=failed reason=\"" << row.message << "\"";
        }
        out << "\n";
    }
    out << "instances: " << rows.size() << "\n";
    out << "failed: " << failed << "\n";
    double sx = 0, sy = 0;
    for (auto [x, y] : points) sx += x, sy += y;
    double sxx = 0, sxy = 0;
    for (auto [x, y] : points) {
        sxx += (x - sx / points.size()) * (x - sx / points.size());
        sxy += (x - sx / points.size()) * (y - sy / points.size());
    }
    if (points.size() >= 2 && sxx > 0)
        out << "time_slope: " << std::setprecision(3) << sxy / sxx << "\n";
    else
        out << "time_slope: n/a\n";
    return out.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cluster vertex deletion: 2-approximation, certificates and LP relaxations", "cvd"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool graph) {
        if (graph) sub->add_option("graph", o.graph_file, "Graph file (\"n m\" header, then one edge per line)")->required();
        sub->add_option("--out", o.out_file, "Write the report to this file instead of standard output");
        sub->add_option("--seed", o.seed, "Random seed")->each([&](const std::string&) { o.seed_given = true; });
    };
    auto costs = [&](CLI::App* sub) { sub->add_option("--costs", o.costs_file, "Cost file (\"v p/q\" lines, default cost 1)"); };

    auto* solve = app.add_subcommand("solve", "Run the local-ratio 2-approximation");
    common(solve, true);
    costs(solve);
    solve->add_flag("--verify", o.verify, "Compare against the exact oracle (n <= 20)");

    auto* exact = app.add_subcommand("exact", "Exhaustive optimum (n <= 20)");
    common(exact, true);
    costs(exact);
    exact->add_flag("--verify", o.verify, "Cross-check with the branching solver");

    auto* certify = app.add_subcommand("certify", "Build and check a 2-good certificate around a root");
    common(certify, true);
    certify->add_option("--root", o.root, "Root vertex")->required();
    certify->add_flag("--verify", o.verify, "Fail with exit code 2 when the certificate does not check");

    auto* gap = app.add_subcommand("gap", "Sherali-Adams relaxation value, optimum and integrality gap");
    common(gap, true);
    costs(gap);
    gap->add_option("--r", o.r, "Level of the hierarchy")->check(CLI::IsMember({0, 1}));
    gap->add_option("--type1", o.type1, "Level-1 rows per P3: all labellings (default) or middle only")->check(CLI::IsMember({"middle", "all"}));
    gap->add_option("--lp", o.lp_file, "Also write the program in LP text format");
    gap->add_flag("--verify", o.verify, "Accepted for uniformity; the solution is always certified");

    auto* gen = app.add_subcommand("gen", "Print a generated or named graph");
    common(gen, false);
    gen->add_option("kind", o.kind, "gnp, path, cycle, wheel, star, 2p3apex, petersen, figure3, figure4")->required();
    gen->add_option("--n", o.n, "Number of vertices (gnp, path, cycle)");
    gen->add_option("--k", o.k, "Wheel order or number of star leaves");
    gen->add_option("--p", o.p, "Edge probability as an exact rational (gnp)");

    auto* bench = app.add_subcommand("bench", "Time the approximation on every file of a corpus");
    common(bench, false);
    bench->add_option("corpus", o.corpus, "Directory of graph files")->required();
    bench->add_option("--jobs", o.jobs, "Worker threads (default: hardware concurrency)");
    bench->add_flag("--verify", o.verify, "Check the ratio with the oracle where n <= 20");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        std::string text;
        if (solve->parsed())
            text = cmd_solve(o);
        else if (exact->parsed())
            text = cmd_exact(o);
        else if (certify->parsed())
            text = cmd_certify(o);
        else if (gap->parsed())
            text = cmd_gap(o);
        else if (gen->parsed())
            text = cmd_gen(o);
        else
            text = cmd_bench(o);
        if (o.out_file.empty())
            out << text;
        else
            write_file(o.out_file, text);
        return 0;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << "\n";
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const OracleRefusal& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

} // namespace cvd
