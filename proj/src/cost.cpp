#include "cvd/cost.hpp"

#include <algorithm>
#include <string>

namespace cvd {

CostFn::CostFn(std::vector<Rational> values) : values_(std::move(values)) {
    for (std::size_t v = 0; v < values_.size(); ++v) {
        values_[v].canonicalize();
        if (values_[v] < 0) throw ContractViolation("negative cost " + to_string(values_[v]) + " at vertex " + std::to_string(v));
    }
}

CostFn CostFn::unit(std::size_t n) { return CostFn(std::vector<Rational>(n, Rational(1))); }

CostFn CostFn::from_integers(std::span<const std::int64_t> values) {
    std::vector<Rational> q;
    q.reserve(values.size());
    for (auto x : values) q.emplace_back(static_cast<long>(x));
    return CostFn(std::move(q));
}

Rational CostFn::total() const {
    Rational s = 0;
    for (const auto& x : values_) s += x;
    return s;
}

Rational CostFn::total(const VertexList& vs) const {
    Rational s = 0;
    for (Vertex v : vs) s += values_.at(v);
    return s;
}

bool CostFn::all_integer() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& q) { return is_integer(q); });
}

} // namespace cvd
