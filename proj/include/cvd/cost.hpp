#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cvd/rational.hpp"
#include "cvd/types.hpp"

namespace cvd {

// Nonnegative exact vertex costs.
class CostFn {
public:
    CostFn() = default;
    // Throws ContractViolation on a negative entry.
    explicit CostFn(std::vector<Rational> values);

    static CostFn unit(std::size_t n);
    static CostFn from_integers(std::span<const std::int64_t> values);

    std::size_t size() const { return values_.size(); }
    const Rational& operator[](Vertex v) const { return values_[v]; }
    std::span<const Rational> values() const { return values_; }

    Rational total() const;
    Rational total(const VertexList& vs) const;
    bool all_integer() const;

    friend bool operator==(const CostFn&, const CostFn&) = default;

private:
    std::vector<Rational> values_;
};

} // namespace cvd
