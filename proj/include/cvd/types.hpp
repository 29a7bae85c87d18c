#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace cvd {

// Vertices are dense 0-based indices; every tie-break in the library refers to them.
using Vertex = std::size_t;
using VertexList = std::vector<Vertex>;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

// A caller broke a documented precondition of an operation.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed input text (graph or cost files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structural precondition of a construction does not hold for the given input
// (twins present, a hole where chordality is required, girth too small, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The exhaustive oracle refuses instances that are too large to enumerate.
class OracleRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant failed; always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline VertexList to_list(const Bitset& s) {
    VertexList out;
    out.reserve(s.count());
    for (auto v = s.find_first(); v != Bitset::npos; v = s.find_next(v)) out.push_back(v);
    return out;
}

inline Bitset to_bitset(std::size_t n, const VertexList& vs) {
    Bitset s(n);
    for (Vertex v : vs) s.set(v);
    return s;
}

std::string format_vertices(const VertexList& vs);

} // namespace cvd
