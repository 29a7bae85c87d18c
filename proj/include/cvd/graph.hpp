#pragma once

#include <array>
#include <istream>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cvd/types.hpp"

namespace cvd {

using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph stored as one adjacency bit-row per vertex.
// Immutable once built; every "deletion" produces a new induced subgraph.
class Graph {
public:
    Graph() = default;

    // Throws ContractViolation on out-of-range endpoints or self-loops.
    // Duplicate edges are ignored.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return rows_.size(); }
    std::size_t size() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
    const Bitset& neighbors(Vertex v) const { return rows_[v]; }
    Bitset closed_neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return rows_[v].count(); }

    Bitset all_vertices() const;
    // Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    explicit Graph(std::vector<Bitset> rows);

    std::vector<Bitset> rows_;
    std::size_t edge_count_ = 0;
};

// Edge-list text: "n m" header followed by m lines "u v".
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

// Induced P3 u-mid-w; ends are stored in increasing order.
struct P3Witness {
    Vertex mid;
    std::array<Vertex, 2> ends;

    std::array<Vertex, 3> sorted() const;
    friend bool operator==(const P3Witness&, const P3Witness&) = default;
};

bool is_p3(const Graph& g, Vertex a, Vertex b, Vertex c);

// Returns the induced P3 whose sorted vertex triple is lexicographically least,
// or nothing when g is a cluster graph.
std::optional<P3Witness> find_p3(const Graph& g);
std::optional<P3Witness> find_p3(const Graph& g, const Bitset& within);

// Every induced P3, each listed once, in increasing order of sorted triple.
std::vector<P3Witness> all_p3s(const Graph& g);

// Cluster test restricted to the vertices in `within` (component-wise clique check).
bool is_cluster(const Graph& g);
bool is_cluster(const Graph& g, const Bitset& within);

// Connected components of g[within], each as a bitset, ordered by least vertex.
std::vector<Bitset> components(const Graph& g, const Bitset& within);
std::vector<Bitset> components(const Graph& g);

struct TwinPartition {
    // Each class sorted ascending; classes ordered by their least member.
    std::vector<VertexList> classes;

    bool twin_free() const;
};

// True-twin classes (equal closed neighbourhoods) by column-wise splitting of the
// closed adjacency matrix, restricted to the vertices in `within`.
TwinPartition twin_classes(const Graph& g);
TwinPartition twin_classes(const Graph& g, const Bitset& within);

// The least pair u < u' of true twins in g[within], if any.
std::optional<Edge> least_twin_pair(const Graph& g, const Bitset& within);

// Vertices at distance at most two from v0 (inside `within` when given).
Bitset ball2(const Graph& g, Vertex v0);
Bitset ball2(const Graph& g, Vertex v0, const Bitset& within);

struct InducedSubgraph {
    Graph graph;
    VertexList to_host; // index in graph -> index in the host graph

    Vertex local(Vertex host_vertex) const;
    VertexList lift(const VertexList& local_vertices) const;
};

// Vertices keep their relative order from the host.
InducedSubgraph induced(const Graph& g, const Bitset& keep);
InducedSubgraph induced(const Graph& g, const VertexList& keep);

// Vertices other than u, u' adjacent to exactly one of them. Requires uu' to be an edge.
Bitset distinguishers(const Graph& g, Vertex u, Vertex u2);

} // namespace cvd
