#include "cvd/chordal.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace cvd {

void check_hole(const Graph& g, const Hole& hole) {
    const auto& c = hole.cycle;
    const std::size_t k = c.size();
    if (k < 4) throw InvariantViolation("hole of length " + std::to_string(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (c[i] == c[j]) throw InvariantViolation("hole repeats vertex " + std::to_string(c[i]));
            if (g.adjacent(c[i], c[j]) != consecutive)
                throw InvariantViolation("hole is not an induced cycle at " + std::to_string(c[i]) + "," + std::to_string(c[j]));
        }
}

Hole normalize_hole(VertexList cycle) {
    auto least = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), least, cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    return {std::move(cycle)};
}

namespace {

std::vector<std::size_t> positions(const EliminationOrder& order, std::size_t n) {
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < order.order.size(); ++i) pos[order.order[i]] = i;
    return pos;
}

Bitset later_neighbors(const Graph& g, Vertex v, const std::vector<std::size_t>& pos) {
    Bitset later(g.order());
    const auto& nv = g.neighbors(v);
    for (auto u = nv.find_first(); u != Bitset::npos; u = nv.find_next(u))
        if (pos[u] > pos[v]) later.set(u);
    return later;
}

// Shortest path from `from` to `to` using only vertices in `allowed`.
std::optional<VertexList> shortest_path(const Graph& g, Vertex from, Vertex to, const Bitset& allowed) {
    std::vector<Vertex> parent(g.order(), g.order());
    std::deque<Vertex> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        if (x == to) break;
        Bitset next = g.neighbors(x) & allowed;
        for (auto y = next.find_first(); y != Bitset::npos; y = next.find_next(y))
            if (parent[y] == g.order()) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    if (parent[to] == g.order()) return std::nullopt;
    VertexList path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

// x and y are non-adjacent neighbours of v. A shortest x-y path avoiding the rest
// of N[v] closes an induced cycle through v.
std::optional<Hole> hole_through(const Graph& g, Vertex v, Vertex x, Vertex y) {
    Bitset allowed = ~g.closed_neighbors(v);
    allowed.set(x);
    allowed.set(y);
    auto path = shortest_path(g, x, y, allowed);
    if (!path) return std::nullopt;
    VertexList cycle{v};
    cycle.insert(cycle.end(), path->begin(), path->end());
    return normalize_hole(std::move(cycle));
}

Hole exhaustive_hole(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexList nb = to_list(g.neighbors(v));
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.adjacent(nb[i], nb[j]))
                    if (auto h = hole_through(g, v, nb[i], nb[j])) return *h;
    }
    throw InvariantViolation("elimination order failed but the graph has no hole");
}

} // namespace

std::variant<EliminationOrder, Hole> peo_or_hole(const Graph& g) {
    const std::size_t n = g.order();
    // Maximum cardinality search; ties go to the least index.
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> numbered(n, false);
    VertexList visit;
    visit.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = n;
        for (Vertex v = 0; v < n; ++v)
            if (!numbered[v] && (best == n || weight[v] > weight[best])) best = v;
        numbered[best] = true;
        visit.push_back(best);
        const auto& nb = g.neighbors(best);
        for (auto u = nb.find_first(); u != Bitset::npos; u = nb.find_next(u))
            if (!numbered[u]) ++weight[u];
    }
    EliminationOrder order{VertexList(visit.rbegin(), visit.rend())};
    auto pos = positions(order, n);

    for (Vertex v : order.order) {
        Bitset later = later_neighbors(g, v, pos);
        if (later.count() < 2) continue;
        Vertex first = later.find_first();
        for (auto u = later.find_next(first); u != Bitset::npos; u = later.find_next(u))
            if (pos[u] < pos[first]) first = u;
        later.reset(first);
        Bitset missing = later - g.neighbors(first);
        if (missing.none()) continue;
        Vertex w = missing.find_first();
        if (auto h = hole_through(g, v, first, w)) {
            check_hole(g, *h);
            return *h;
        }
        Hole h = exhaustive_hole(g);
        check_hole(g, h);
        return h;
    }
    return order;
}

bool is_elimination_order(const Graph& g, const EliminationOrder& order) {
    const std::size_t n = g.order();
    if (order.order.size() != n) return false;
    auto pos = positions(order, n);
    if (std::any_of(pos.begin(), pos.end(), [n](std::size_t p) { return p == n; })) return false;
    // Checking each vertex against its earliest later neighbour suffices.
    for (Vertex v : order.order) {
        Bitset later = later_neighbors(g, v, pos);
        if (later.count() < 2) continue;
        Vertex first = later.find_first();
        for (auto u = later.find_next(first); u != Bitset::npos; u = later.find_next(u))
            if (pos[u] < pos[first]) first = u;
        later.reset(first);
        if (!later.is_subset_of(g.neighbors(first))) return false;
    }
    return true;
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

} // namespace

CliqueTree clique_tree(const Graph& g, const EliminationOrder& order) {
    if (!is_elimination_order(g, order)) throw ContractViolation("clique_tree: not a perfect elimination order");
    const std::size_t n = g.order();
    auto pos = positions(order, n);
    std::vector<Bitset> candidates;
    candidates.reserve(n);
    for (Vertex v : order.order) {
        Bitset c = later_neighbors(g, v, pos);
        c.set(v);
        candidates.push_back(std::move(c));
    }
    std::vector<Bitset> maximal;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && !dominated; ++j)
            dominated = j != i && candidates[i].is_proper_subset_of(candidates[j]);
        if (!dominated) maximal.push_back(candidates[i]);
    }
    CliqueTree t;
    for (const auto& k : maximal) t.nodes.push_back(to_list(k));
    std::sort(t.nodes.begin(), t.nodes.end());

    // Maximum-weight spanning forest of the clique intersection graph.
    struct Candidate {
        std::size_t weight, a, b;
    };
    std::vector<Bitset> sets;
    for (const auto& node : t.nodes) sets.push_back(to_bitset(n, node));
    std::vector<Candidate> pairs;
    for (std::size_t a = 0; a < sets.size(); ++a)
        for (std::size_t b = a + 1; b < sets.size(); ++b)
            if (std::size_t w = (sets[a] & sets[b]).count(); w > 0) pairs.push_back({w, a, b});
    std::stable_sort(pairs.begin(), pairs.end(), [](const Candidate& x, const Candidate& y) { return x.weight > y.weight; });
    DisjointSets dsu(sets.size());
    for (const auto& p : pairs)
        if (dsu.unite(p.a, p.b)) t.edges.emplace_back(p.a, p.b);
    return t;
}

namespace {

// For each tree edge: the vertices of the cliques on either side, minus the separator.
struct EdgeSides {
    Bitset side_a;
    Bitset side_b;
};

Bitset union_of_side(const CliqueTree& t, std::size_t n, std::size_t start, std::size_t blocked) {
    std::vector<std::vector<std::size_t>> adj(t.nodes.size());
    for (auto [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    Bitset verts(n);
    std::vector<bool> seen(t.nodes.size(), false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    seen[blocked] = true;
    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (Vertex v : t.nodes[x]) verts.set(v);
        for (std::size_t y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
    }
    return verts;
}

EdgeSides sides_of(const Graph& g, const CliqueTree& t, std::size_t a, std::size_t b) {
    const std::size_t n = g.order();
    Bitset sep = to_bitset(n, t.nodes[a]) & to_bitset(n, t.nodes[b]);
    return {union_of_side(t, n, a, b) - sep, union_of_side(t, n, b, a) - sep};
}

} // namespace

std::optional<TwoP3> find_2p3_chordal(const Graph& g, const CliqueTree& t) {
    std::vector<P3Witness> per_component;
    for (const auto& comp : components(g))
        if (auto p = find_p3(g, comp)) per_component.push_back(*p);
    if (per_component.size() >= 2) return TwoP3{per_component[0], per_component[1]};
    if (per_component.empty()) return std::nullopt;
    for (auto [a, b] : t.edges) {
        auto s = sides_of(g, t, a, b);
        auto pa = find_p3(g, s.side_a);
        if (!pa) continue;
        auto pb = find_p3(g, s.side_b);
        if (!pb) continue;
        return TwoP3{*pa, *pb};
    }
    return std::nullopt;
}

VertexList hitting_clique(const Graph& g, const CliqueTree& t) {
    if (t.nodes.empty()) return {};
    const std::size_t n = g.order();
    std::vector<Bitset> bad;
    for (const auto& comp : components(g))
        if (!is_cluster(g, comp)) bad.push_back(comp);
    if (bad.size() >= 2) throw PreconditionError("hitting_clique: two components contain a P3 (2P3 present)");

    VertexList result;
    if (bad.empty()) {
        result = t.nodes.front();
    } else {
        // Orient each tree edge towards its non-cluster side; a sink has no outgoing edge.
        std::vector<bool> has_out(t.nodes.size(), false);
        for (auto [a, b] : t.edges) {
            auto s = sides_of(g, t, a, b);
            bool bad_a = !is_cluster(g, s.side_a);
            bool bad_b = !is_cluster(g, s.side_b);
            if (bad_a && bad_b) throw PreconditionError("hitting_clique: both sides of a clique separator contain a P3 (2P3 present)");
            if (bad_b) has_out[a] = true;
            if (bad_a) has_out[b] = true;
        }
        for (std::size_t k = 0; k < t.nodes.size(); ++k) {
            bool in_component = to_bitset(n, t.nodes[k]).intersects(bad.front());
            if (!in_component || has_out[k]) continue;
            if (result.empty() || t.nodes[k] < result) result = t.nodes[k];
        }
        if (result.empty()) throw InvariantViolation("hitting_clique: oriented clique tree has no sink");
    }

    Bitset k = to_bitset(n, result);
    for (Vertex v : result)
        if (!(k - g.closed_neighbors(v)).none()) throw InvariantViolation("hitting_clique: result is not a clique");
    Bitset common = g.all_vertices();
    for (Vertex v : result) common &= g.closed_neighbors(v);
    if (common != k) throw InvariantViolation("hitting_clique: result is not a maximal clique");
    if (!is_cluster(g, g.all_vertices() - k)) throw InvariantViolation("hitting_clique: remainder is not a cluster graph");
    return result;
}

WeightedClique max_weight_clique_chordal(const Graph& g, const EliminationOrder& order, std::span<const Rational> cost) {
    if (cost.size() != g.order()) throw ContractViolation("max_weight_clique_chordal: cost vector has wrong length");
    auto pos = positions(order, g.order());
    WeightedClique best{{}, 0};
    bool have = false;
    for (Vertex v : order.order) {
        Bitset c = later_neighbors(g, v, pos);
        c.set(v);
        Rational w = 0;
        for (auto u = c.find_first(); u != Bitset::npos; u = c.find_next(u)) w += cost[u];
        if (!have || w > best.weight) {
            best = {to_list(c), w};
            have = true;
        }
    }
    return best;
}

} // namespace cvd
