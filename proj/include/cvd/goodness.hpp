#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvd/chordal.hpp"
#include "cvd/exact.hpp"
#include "cvd/graph.hpp"

namespace cvd {

enum class GoodnessKind { Strong, Central };

// A local weighted subgraph (H, c_H) of a host graph.
//
// Strong:  c_H(V(H)) <= 2 OPT(H, c_H).
// Central: the root's open neighbourhood lies in H, c_H >= 1 on its closed
//          neighbourhood, and c_H(V(H)) <= 2 OPT(H, c_H) + 1.
struct GoodCertificate {
    VertexList vertices;              // host indices, ascending
    std::vector<std::int64_t> costs;  // parallel to `vertices`
    GoodnessKind kind = GoodnessKind::Strong;
    std::optional<Vertex> root;       // set iff kind == Central

    std::int64_t total() const;
    // Zero for host vertices outside the certificate.
    std::int64_t cost_of(Vertex host_vertex) const;
};

// Wheel on hole + v0: v0 costs k-5, the rim costs 1 each (k = |hole| + 1 >= 5).
GoodCertificate wheel_certificate(const Graph& host, const Hole& hole, Vertex v0);

// 2P3 plus apex v0: v0 costs 2, the six path vertices cost 1.
GoodCertificate two_p3_certificate(const Graph& host, const TwoP3& six, Vertex v0);

// Intermediate objects of the twin-free, universal-root construction.
struct BaseCaseConstruction {
    VertexList hitting_clique;               // K0, indices of h
    std::vector<VertexList> clusters;        // components of h - v0 - K0
    std::vector<VertexList> stable_sets;     // S_v for v in hitting_clique (same order)
    std::vector<std::int64_t> inner_costs;   // sum of indicator vectors of S_v; 0 at v0
    std::int64_t root_cost = 0;
};

// Requires: h twin-free, v0 universal, h - v0 chordal and 2P3-free
// (PreconditionError names the first violated condition).
BaseCaseConstruction base_case_construction(const Graph& h, Vertex v0);
GoodCertificate base_case_certificate(const Graph& h, Vertex v0);

// One deletion of a distance-2 vertex together with the twins it alone distinguished.
struct PeelStep {
    Vertex peeled = 0;
    std::vector<Edge> matching;  // (kept u, deleted u') in indices of the pre-peel graph
    VertexList kept;             // post-peel index -> pre-peel index
    std::size_t order_before = 0;
};

struct PeelResult {
    Graph reduced;
    PeelStep step;
};

PeelResult peel_vertex(const Graph& h, Vertex v0, Vertex v);

// Extends costs on the reduced graph back to the pre-peel graph.
std::vector<std::int64_t> lift_cost(const PeelStep& step, std::span<const std::int64_t> reduced_costs);

// Strongly or centrally 2-good certificate rooted at v0 in the twin-free graph g.
GoodCertificate find_2good(const Graph& g, Vertex v0);

// Same construction on a graph of radius <= 2 around `root` whose twins inside
// N[root] are all distinguished; vertices are indices of h.
GoodCertificate find_2good_local(const Graph& h, Vertex root);

struct CertificateCheck {
    bool ok = false;
    std::string reason;
    Rational opt;
};

// Checks every invariant of `cert` against `host`, computing OPT(H, c_H) with
// `oracle`. OracleRefusal when the certificate has more than 20 vertices.
CertificateCheck check_certificate(const Graph& host, const GoodCertificate& cert, const Oracle& oracle = exact_opt);
bool verify_certificate(const Graph& host, const GoodCertificate& cert, const Oracle& oracle = exact_opt);

} // namespace cvd
