#include "cvd/goodness.hpp"

#include <algorithm>
#include <numeric>

namespace cvd {

std::int64_t GoodCertificate::total() const { return std::accumulate(costs.begin(), costs.end(), std::int64_t{0}); }

std::int64_t GoodCertificate::cost_of(Vertex host_vertex) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), host_vertex);
    if (it == vertices.end() || *it != host_vertex) return 0;
    return costs[static_cast<std::size_t>(it - vertices.begin())];
}

namespace {

GoodCertificate strong_with_apex(const VertexList& rim, Vertex v0, std::int64_t apex_cost) {
    GoodCertificate cert;
    cert.vertices = rim;
    cert.vertices.push_back(v0);
    std::sort(cert.vertices.begin(), cert.vertices.end());
    for (Vertex v : cert.vertices) cert.costs.push_back(v == v0 ? apex_cost : 1);
    cert.kind = GoodnessKind::Strong;
    return cert;
}

void require_inside_neighborhood(const Graph& host, const VertexList& vs, Vertex v0, const char* who) {
    for (Vertex v : vs)
        if (v >= host.order() || !host.adjacent(v0, v))
            throw ContractViolation(std::string(who) + ": vertex " + std::to_string(v) + " is not a neighbour of the apex");
}

} // namespace

GoodCertificate wheel_certificate(const Graph& host, const Hole& hole, Vertex v0) {
    const auto k = static_cast<std::int64_t>(hole.cycle.size()) + 1;
    if (k < 5) throw ContractViolation("wheel_certificate: wheel needs at least 5 vertices");
    require_inside_neighborhood(host, hole.cycle, v0, "wheel_certificate");
    return strong_with_apex(hole.cycle, v0, k - 5);
}

GoodCertificate two_p3_certificate(const Graph& host, const TwoP3& six, Vertex v0) {
    VertexList rim;
    for (const auto* p : {&six.first, &six.second})
        for (Vertex v : p->sorted()) rim.push_back(v);
    require_inside_neighborhood(host, rim, v0, "two_p3_certificate");
    return strong_with_apex(rim, v0, 2);
}

// ---------------------------------------------------------------------------
// Twin-free base case

BaseCaseConstruction base_case_construction(const Graph& h, Vertex v0) {
    const std::size_t n = h.order();
    if (v0 >= n) throw ContractViolation("base case: root out of range");
    if (h.degree(v0) + 1 != n) throw PreconditionError("base case: root is not universal");
    if (!twin_classes(h).twin_free()) throw PreconditionError("base case: graph has true twins");

    Bitset rest_mask = h.all_vertices();
    rest_mask.reset(v0);
    auto sub = induced(h, rest_mask);
    auto chordal = peo_or_hole(sub.graph);
    if (std::holds_alternative<Hole>(chordal)) throw PreconditionError("base case: neighbourhood of the root has a hole");
    auto tree = clique_tree(sub.graph, std::get<EliminationOrder>(chordal));
    if (find_2p3_chordal(sub.graph, tree)) throw PreconditionError("base case: neighbourhood of the root contains a 2P3");

    BaseCaseConstruction out;
    out.hitting_clique = sub.lift(hitting_clique(sub.graph, tree));
    const VertexList& k0 = out.hitting_clique;

    Bitset outside = rest_mask;
    for (Vertex v : k0) outside.reset(v);
    for (const auto& comp : components(h, outside)) out.clusters.push_back(to_list(comp));

    // Per cluster, order its vertices by decreasing number of K0-neighbours (the
    // staircase column order); phi(v) is the first of them not adjacent to v.
    out.stable_sets.assign(k0.size(), VertexList{});
    for (std::size_t r = 0; r < k0.size(); ++r) out.stable_sets[r].push_back(k0[r]);
    for (const auto& cluster : out.clusters) {
        VertexList cols = cluster;
        auto k0_degree = [&](Vertex u) {
            return std::count_if(k0.begin(), k0.end(), [&](Vertex v) { return h.adjacent(u, v); });
        };
        std::stable_sort(cols.begin(), cols.end(), [&](Vertex a, Vertex b) { return k0_degree(a) > k0_degree(b); });
        for (std::size_t r = 0; r < k0.size(); ++r) {
            const Vertex v = k0[r];
            auto first_zero = std::find_if(cols.begin(), cols.end(), [&](Vertex u) { return !h.adjacent(v, u); });
            if (first_zero == cols.end()) continue;
            if (std::any_of(first_zero, cols.end(), [&](Vertex u) { return h.adjacent(v, u); }))
                throw InvariantViolation("base case: adjacency block between K0 and a cluster is not a staircase");
            out.stable_sets[r].push_back(*first_zero);
        }
    }
    for (auto& s : out.stable_sets) std::sort(s.begin(), s.end());

    out.inner_costs.assign(n, 0);
    for (const auto& s : out.stable_sets)
        for (Vertex u : s) ++out.inner_costs[u];
    const std::int64_t inner_total = std::accumulate(out.inner_costs.begin(), out.inner_costs.end(), std::int64_t{0});
    out.root_cost = inner_total - 2 * static_cast<std::int64_t>(k0.size()) + 1;

    // Stable-set family: coverage, size >= 2 with v in S_v, pairwise unions contain a P3.
    for (Vertex u = 0; u < n; ++u)
        if (u != v0 && out.inner_costs[u] == 0) throw InvariantViolation("base case: vertex " + std::to_string(u) + " is in no stable set");
    for (std::size_t r = 0; r < k0.size(); ++r) {
        const auto& s = out.stable_sets[r];
        if (s.size() < 2 || !std::binary_search(s.begin(), s.end(), k0[r]))
            throw InvariantViolation("base case: stable set of " + std::to_string(k0[r]) + " is too small");
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                if (h.adjacent(s[a], s[b])) throw InvariantViolation("base case: S_v is not stable");
        for (std::size_t q = r + 1; q < k0.size(); ++q) {
            VertexList both = s;
            both.insert(both.end(), out.stable_sets[q].begin(), out.stable_sets[q].end());
            if (!find_p3(h, to_bitset(n, both))) throw InvariantViolation("base case: union of two stable sets is P3-free");
        }
    }
    if (out.root_cost < 1) throw InvariantViolation("base case: root cost below 1");
    return out;
}

GoodCertificate base_case_certificate(const Graph& h, Vertex v0) {
    auto bc = base_case_construction(h, v0);
    GoodCertificate cert;
    cert.vertices.resize(h.order());
    std::iota(cert.vertices.begin(), cert.vertices.end(), Vertex{0});
    cert.costs = bc.inner_costs;
    cert.costs[v0] = bc.root_cost;
    cert.kind = GoodnessKind::Central;
    cert.root = v0;
    return cert;
}

// ---------------------------------------------------------------------------
// Peeling distance-2 vertices

PeelResult peel_vertex(const Graph& h, Vertex v0, Vertex v) {
    const std::size_t n = h.order();
    if (v0 >= n || v >= n) throw ContractViolation("peel_vertex: vertex out of range");
    const Bitset closed = h.closed_neighbors(v0);
    if (closed.test(v) || !h.neighbors(v).intersects(h.neighbors(v0)))
        throw ContractViolation("peel_vertex: vertex " + std::to_string(v) + " is not at distance 2 from the root");
    if (ball2(h, v0).count() != n) throw ContractViolation("peel_vertex: graph has a vertex beyond distance 2 from the root");

    PeelStep step;
    step.peeled = v;
    step.order_before = n;
    Bitset matched(n);
    for (auto a = closed.find_first(); a != Bitset::npos; a = closed.find_next(a)) {
        Bitset later = h.neighbors(a) & closed;
        for (auto b = later.find_next(a); b != Bitset::npos; b = later.find_next(b)) {
            Bitset d = distinguishers(h, a, b);
            if (d.none())
                throw ContractViolation("peel_vertex: true twins " + std::to_string(a) + "," + std::to_string(b) +
                                        " inside N[root] have no distinguisher");
            if (d.count() != 1 || !d.test(v)) continue;
            if (matched.test(a) || matched.test(b))
                throw InvariantViolation("peel_vertex: edges distinguished only by " + std::to_string(v) + " do not form a matching");
            matched.set(a);
            matched.set(b);
            Vertex drop = a == v0 ? b : b == v0 ? a : std::max(a, b);
            Vertex keep = drop == a ? b : a;
            step.matching.emplace_back(keep, drop);
        }
    }
    Bitset remain = h.all_vertices();
    remain.reset(v);
    for (auto [keep, drop] : step.matching) remain.reset(drop);
    auto sub = induced(h, remain);
    step.kept = std::move(sub.to_host);
    return {std::move(sub.graph), std::move(step)};
}

std::vector<std::int64_t> lift_cost(const PeelStep& step, std::span<const std::int64_t> reduced_costs) {
    if (reduced_costs.size() != step.kept.size()) throw ContractViolation("lift_cost: cost vector has wrong length");
    std::vector<std::int64_t> c(step.order_before, 0);
    for (std::size_t i = 0; i < step.kept.size(); ++i) c[step.kept[i]] = reduced_costs[i];
    std::int64_t peeled = 0;
    for (auto [keep, drop] : step.matching) {
        c[drop] = c[keep];
        peeled += c[keep];
    }
    c[step.peeled] = peeled;
    return c;
}

// ---------------------------------------------------------------------------
// Orchestration

GoodCertificate find_2good_local(const Graph& h, Vertex root) {
    auto nb = induced(h, h.neighbors(root));
    auto chordal = peo_or_hole(nb.graph);
    if (auto* hole = std::get_if<Hole>(&chordal)) {
        Hole mapped{nb.lift(hole->cycle)};
        return wheel_certificate(h, mapped, root);
    }
    auto tree = clique_tree(nb.graph, std::get<EliminationOrder>(chordal));
    if (auto six = find_2p3_chordal(nb.graph, tree)) {
        auto lift_p3 = [&](const P3Witness& p) { return P3Witness{nb.to_host[p.mid], {nb.to_host[p.ends[0]], nb.to_host[p.ends[1]]}}; };
        return two_p3_certificate(h, TwoP3{lift_p3(six->first), lift_p3(six->second)}, root);
    }

    // Peel distance-2 vertices, highest index first, until the root is universal.
    std::vector<PeelStep> stack;
    Graph cur = h;
    Vertex cur_root = root;
    while (cur.degree(cur_root) + 1 < cur.order()) {
        Bitset far = ~cur.closed_neighbors(cur_root);
        Vertex v = 0;
        for (auto x = far.find_first(); x != Bitset::npos; x = far.find_next(x)) v = x;
        auto peeled = peel_vertex(cur, cur_root, v);
        cur_root = static_cast<Vertex>(std::lower_bound(peeled.step.kept.begin(), peeled.step.kept.end(), cur_root) -
                                       peeled.step.kept.begin());
        cur = std::move(peeled.reduced);
        stack.push_back(std::move(peeled.step));
    }
    GoodCertificate base = base_case_certificate(cur, cur_root);
    std::vector<std::int64_t> costs = base.costs;
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) costs = lift_cost(*it, costs);

    GoodCertificate cert;
    cert.vertices.resize(h.order());
    std::iota(cert.vertices.begin(), cert.vertices.end(), Vertex{0});
    cert.costs = std::move(costs);
    cert.kind = GoodnessKind::Central;
    cert.root = root;
    return cert;
}

GoodCertificate find_2good(const Graph& g, Vertex v0) {
    if (v0 >= g.order()) throw ContractViolation("find_2good: root out of range");
    if (!twin_classes(g).twin_free()) throw ContractViolation("find_2good: graph has true twins");
    auto local = induced(g, ball2(g, v0));
    GoodCertificate cert = find_2good_local(local.graph, local.local(v0));
    cert.vertices = local.lift(cert.vertices);
    if (cert.root) cert.root = local.to_host[*cert.root];
    return cert;
}

CertificateCheck check_certificate(const Graph& host, const GoodCertificate& cert, const Oracle& oracle) {
    CertificateCheck out;
    auto fail = [&](std::string why) {
        out.ok = false;
        out.reason = std::move(why);
        return out;
    };
    if (cert.vertices.size() != cert.costs.size()) return fail("vertex and cost lists differ in length");
    if (!std::is_sorted(cert.vertices.begin(), cert.vertices.end()) ||
        std::adjacent_find(cert.vertices.begin(), cert.vertices.end()) != cert.vertices.end())
        return fail("vertex list is not strictly increasing");
    if (!cert.vertices.empty() && cert.vertices.back() >= host.order()) return fail("vertex out of range");
    if (std::any_of(cert.costs.begin(), cert.costs.end(), [](std::int64_t x) { return x < 0; })) return fail("negative cost");
    if (cert.total() == 0) return fail("cost function is identically zero");
    if (cert.vertices.size() > kOracleMaxOrder)
        throw OracleRefusal("certificate has " + std::to_string(cert.vertices.size()) + " vertices; the oracle handles at most " +
                            std::to_string(kOracleMaxOrder));

    auto local = induced(host, cert.vertices);
    out.opt = oracle(local.graph, CostFn::from_integers(cert.costs));
    const Rational total(static_cast<long>(cert.total()));
    if (cert.kind == GoodnessKind::Strong) {
        if (total > 2 * out.opt) return fail("total " + to_string(total) + " exceeds 2*OPT = " + to_string(2 * out.opt));
    } else {
        if (!cert.root) return fail("central certificate without a root");
        const Vertex r = *cert.root;
        if (r >= host.order()) return fail("root out of range");
        Bitset closed = host.closed_neighbors(r);
        for (auto u = closed.find_first(); u != Bitset::npos; u = closed.find_next(u)) {
            if (!std::binary_search(cert.vertices.begin(), cert.vertices.end(), u))
                return fail("neighbour " + std::to_string(u) + " of the root is missing");
            if (cert.cost_of(u) < 1) return fail("closed neighbour " + std::to_string(u) + " of the root has cost 0");
        }
        if (total > 2 * out.opt + 1) return fail("total " + to_string(total) + " exceeds 2*OPT+1 = " + to_string(2 * out.opt + 1));
    }
    out.ok = true;
    return out;
}

bool verify_certificate(const Graph& host, const GoodCertificate& cert, const Oracle& oracle) {
    return check_certificate(host, cert, oracle).ok;
}

} // namespace cvd
