#include "cvd/rational.hpp"

#include <cctype>
#include <sstream>

#include "cvd/types.hpp"

namespace cvd {

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

bool is_decimal_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_decimal_integer(num) || !is_decimal_integer(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
}

std::string format_vertices(const VertexList& vs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ' ';
        os << vs[i];
    }
    return os.str();
}

} // namespace cvd
