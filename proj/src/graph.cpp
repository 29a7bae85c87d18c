#include "cvd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>

namespace cvd {

Graph::Graph(std::vector<Bitset> rows) : rows_(std::move(rows)) {
    std::size_t degree_sum = 0;
    for (const auto& r : rows_) degree_sum += r.count();
    edge_count_ = degree_sum / 2;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<Bitset> rows(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw ContractViolation("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw ContractViolation("self-loop at vertex " + std::to_string(u));
        rows[u].set(v);
        rows[v].set(u);
    }
    return Graph(std::move(rows));
}

Bitset Graph::closed_neighbors(Vertex v) const {
    Bitset r = rows_[v];
    r.set(v);
    return r;
}

Bitset Graph::all_vertices() const {
    Bitset all(order());
    all.set();
    return all;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (auto v = rows_[u].find_next(u); v != Bitset::npos; v = rows_[u].find_next(v)) out.emplace_back(u, v);
    return out;
}

// ---------------------------------------------------------------------------
// Edge-list format

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_index(std::string_view tok, std::size_t& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && p == tok.data() + tok.size();
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0, m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() != 2) fail(line_no, have_header ? "expected \"u v\"" : "expected header \"n m\"");
        std::size_t a = 0, b = 0;
        if (!parse_index(toks[0], a) || !parse_index(toks[1], b))
            fail(line_no, have_header ? "edge endpoints must be non-negative integers" : "malformed header");
        if (!have_header) {
            n = a;
            m = b;
            have_header = true;
            edges.reserve(m);
            continue;
        }
        if (edges.size() == m) fail(line_no, "more edge lines than the " + std::to_string(m) + " declared");
        if (a >= n || b >= n) fail(line_no, "vertex index out of range (n = " + std::to_string(n) + ")");
        if (a == b) fail(line_no, "self-loop at vertex " + std::to_string(a));
        edges.emplace_back(a, b);
    }
    if (!have_header) fail(line_no + 1, "missing header \"n m\"");
    if (edges.size() != m)
        fail(line_no + 1, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));
    return Graph::from_edges(n, edges);
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

std::string write_graph(const Graph& g) {
    std::ostringstream os;
    auto es = g.edges();
    os << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) os << u << ' ' << v << '\n';
    return os.str();
}

// ---------------------------------------------------------------------------
// P3s and cluster tests

std::array<Vertex, 3> P3Witness::sorted() const {
    std::array<Vertex, 3> t{mid, ends[0], ends[1]};
    std::sort(t.begin(), t.end());
    return t;
}

bool is_p3(const Graph& g, Vertex a, Vertex b, Vertex c) {
    if (a == b || b == c || a == c) return false;
    int edges = int(g.adjacent(a, b)) + int(g.adjacent(b, c)) + int(g.adjacent(a, c));
    return edges == 2;
}

namespace {

P3Witness make_p3(const Graph& g, Vertex a, Vertex b, Vertex c) {
    Vertex mid = g.adjacent(a, b) && g.adjacent(a, c) ? a : g.adjacent(b, a) && g.adjacent(b, c) ? b : c;
    std::array<Vertex, 3> t{a, b, c};
    std::array<Vertex, 2> ends{};
    std::size_t k = 0;
    for (Vertex x : t)
        if (x != mid) ends[k++] = x;
    return {mid, ends};
}

// Third vertices c > b completing an induced P3 with a < b.
Bitset p3_completions(const Graph& g, Vertex a, Vertex b, const Bitset& within) {
    Bitset cand = g.adjacent(a, b) ? (g.neighbors(a) ^ g.neighbors(b)) : (g.neighbors(a) & g.neighbors(b));
    cand &= within;
    cand.reset(a);
    cand.reset(b);
    return cand;
}

} // namespace

std::optional<P3Witness> find_p3(const Graph& g, const Bitset& within) {
    if (is_cluster(g, within)) return std::nullopt;
    for (auto a = within.find_first(); a != Bitset::npos; a = within.find_next(a)) {
        for (auto b = within.find_next(a); b != Bitset::npos; b = within.find_next(b)) {
            Bitset cand = p3_completions(g, a, b, within);
            if (auto c = cand.find_next(b); c != Bitset::npos) return make_p3(g, a, b, c);
        }
    }
    return std::nullopt;
}

std::optional<P3Witness> find_p3(const Graph& g) { return find_p3(g, g.all_vertices()); }

std::vector<P3Witness> all_p3s(const Graph& g) {
    std::vector<P3Witness> out;
    Bitset all = g.all_vertices();
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b) {
            Bitset cand = p3_completions(g, a, b, all);
            for (auto c = cand.find_next(b); c != Bitset::npos; c = cand.find_next(c)) out.push_back(make_p3(g, a, b, c));
        }
    return out;
}

bool is_cluster(const Graph& g, const Bitset& within) {
    Bitset unseen = within;
    for (auto v = unseen.find_first(); v != Bitset::npos; v = unseen.find_next(v)) {
        Bitset block = g.closed_neighbors(v) & within;
        for (auto u = block.find_first(); u != Bitset::npos; u = block.find_next(u)) {
            Bitset nu = g.closed_neighbors(u) & within;
            if (nu != block) return false;
        }
        unseen -= block;
    }
    return true;
}

bool is_cluster(const Graph& g) { return is_cluster(g, g.all_vertices()); }

std::vector<Bitset> components(const Graph& g, const Bitset& within) {
    std::vector<Bitset> out;
    Bitset unseen = within;
    for (auto s = unseen.find_first(); s != Bitset::npos; s = unseen.find_first()) {
        Bitset comp(g.order());
        Bitset frontier(g.order());
        frontier.set(s);
        while (frontier.any()) {
            comp |= frontier;
            Bitset next(g.order());
            for (auto v = frontier.find_first(); v != Bitset::npos; v = frontier.find_next(v)) next |= g.neighbors(v);
            next &= within;
            next -= comp;
            frontier = std::move(next);
        }
        unseen -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<Bitset> components(const Graph& g) { return components(g, g.all_vertices()); }

// ---------------------------------------------------------------------------
// Twins

bool TwinPartition::twin_free() const {
    return std::all_of(classes.begin(), classes.end(), [](const VertexList& c) { return c.size() == 1; });
}

TwinPartition twin_classes(const Graph& g, const Bitset& within) {
    // Rows are closed neighbourhoods restricted to `within`; split every open
    // class by one column at a time. Singleton classes are final.
    std::vector<VertexList> open;
    std::vector<VertexList> done;
    if (within.any()) open.push_back(to_list(within));
    for (auto col = within.find_first(); col != Bitset::npos && !open.empty(); col = within.find_next(col)) {
        std::vector<VertexList> next;
        for (auto& cls : open) {
            VertexList zero, one;
            for (Vertex v : cls) (v == col || g.adjacent(v, col) ? one : zero).push_back(v);
            for (auto* part : {&zero, &one}) {
                if (part->size() == 1) done.push_back(std::move(*part));
                else if (part->size() > 1) next.push_back(std::move(*part));
            }
        }
        open = std::move(next);
    }
    for (auto& cls : open) done.push_back(std::move(cls));
    std::sort(done.begin(), done.end(), [](const VertexList& a, const VertexList& b) { return a.front() < b.front(); });
    return {std::move(done)};
}

TwinPartition twin_classes(const Graph& g) { return twin_classes(g, g.all_vertices()); }

std::optional<Edge> least_twin_pair(const Graph& g, const Bitset& within) {
    for (const auto& cls : twin_classes(g, within).classes)
        if (cls.size() > 1) return Edge{cls[0], cls[1]};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Neighbourhoods and subgraphs

Bitset ball2(const Graph& g, Vertex v0, const Bitset& within) {
    Bitset first = g.closed_neighbors(v0) & within;
    first.set(v0);
    Bitset ball = first;
    for (auto u = first.find_first(); u != Bitset::npos; u = first.find_next(u)) ball |= g.neighbors(u);
    return (ball & within) | first;
}

Bitset ball2(const Graph& g, Vertex v0) { return ball2(g, v0, g.all_vertices()); }

Vertex InducedSubgraph::local(Vertex host_vertex) const {
    auto it = std::lower_bound(to_host.begin(), to_host.end(), host_vertex);
    if (it == to_host.end() || *it != host_vertex)
        throw ContractViolation("vertex " + std::to_string(host_vertex) + " is not in the induced subgraph");
    return static_cast<Vertex>(it - to_host.begin());
}

VertexList InducedSubgraph::lift(const VertexList& local_vertices) const {
    VertexList out;
    out.reserve(local_vertices.size());
    for (Vertex v : local_vertices) out.push_back(to_host.at(v));
    return out;
}

InducedSubgraph induced(const Graph& g, const VertexList& keep) {
    VertexList map = keep;
    std::sort(map.begin(), map.end());
    map.erase(std::unique(map.begin(), map.end()), map.end());
    for (Vertex v : map)
        if (v >= g.order()) throw ContractViolation("induced: vertex " + std::to_string(v) + " out of range");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < map.size(); ++i)
        for (std::size_t j = i + 1; j < map.size(); ++j)
            if (g.adjacent(map[i], map[j])) edges.emplace_back(i, j);
    return {Graph::from_edges(map.size(), edges), std::move(map)};
}

InducedSubgraph induced(const Graph& g, const Bitset& keep) { return induced(g, to_list(keep)); }

Bitset distinguishers(const Graph& g, Vertex u, Vertex u2) {
    if (u == u2 || !g.adjacent(u, u2))
        throw ContractViolation("distinguishers: " + std::to_string(u) + " " + std::to_string(u2) + " is not an edge");
    Bitset d = g.neighbors(u) ^ g.neighbors(u2);
    d.reset(u);
    d.reset(u2);
    return d;
}

} // namespace cvd
