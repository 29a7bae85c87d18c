#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cvd {

// Exact rational arithmetic (GMP). Values are kept canonical after every operation.
using Rational = mpq_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "k", "-k", "p/q"; throws ParseError otherwise or on a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace cvd
