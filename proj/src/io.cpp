#include "cvd/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace cvd {

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> words;
    for (std::string w; in >> w;) words.push_back(w);
    return words;
}

bool parse_index(const std::string& word, std::size_t& out) {
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), out);
    return ec == std::errc{} && ptr == word.data() + word.size();
}

} // namespace

CostFn parse_costs(std::istream& in, std::size_t n) {
    std::vector<Rational> values(n, Rational(1));
    std::vector<bool> seen(n, false);
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        auto words = split_words(line);
        if (words.empty() || words[0][0] == '#') continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (words.size() != 2) throw ParseError(where + "expected \"vertex cost\"");
        std::size_t v = 0;
        if (!parse_index(words[0], v)) throw ParseError(where + "bad vertex \"" + words[0] + "\"");
        if (v >= n) throw ParseError(where + "vertex " + words[0] + " out of range (n = " + std::to_string(n) + ")");
        if (seen[v]) throw ParseError(where + "vertex " + words[0] + " listed twice");
        Rational q;
        try {
            q = parse_rational(words[1]);
        } catch (const ParseError& e) {
            throw ParseError(where + e.what());
        }
        if (sgn(q) < 0) throw ParseError(where + "negative cost " + words[1]);
        values[v] = q;
        seen[v] = true;
    }
    return CostFn(std::move(values));
}

CostFn parse_costs(std::string_view text, std::size_t n) {
    std::istringstream in{std::string(text)};
    return parse_costs(in, n);
}

std::string write_costs(const CostFn& c) {
    std::string out;
    for (Vertex v = 0; v < c.size(); ++v) out += std::to_string(v) + " " + to_string(c[v]) + "\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

void Report::add(std::string key, std::string value) { fields_.emplace_back(std::move(key), std::move(value)); }

void Report::add_timing(std::string key, std::chrono::duration<double> elapsed) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << elapsed.count() * 1000.0;
    timing_.emplace_back(std::move(key), s.str());
}

std::string Report::str() const {
    std::string out;
    for (const auto* part : {&fields_, &timing_})
        for (const auto& [k, v] : *part) out += k + ": " + v + "\n";
    return out;
}

std::string write_certificate(const GoodCertificate& cert) {
    std::string costs;
    for (std::size_t i = 0; i < cert.costs.size(); ++i) costs += (i ? " " : "") + std::to_string(cert.costs[i]);
    std::string out;
    out += "kind: " + std::string(cert.kind == GoodnessKind::Strong ? "strong" : "central") + "\n";
    out += "root: " + (cert.root ? std::to_string(*cert.root) : std::string("-")) + "\n";
    out += "vertices: " + format_vertices(cert.vertices) + "\n";
    out += "costs: " + costs + "\n";
    out += "total: " + std::to_string(cert.total()) + "\n";
    return out;
}

GoodCertificate parse_certificate(std::string_view text) {
    std::map<std::string, std::string> fields;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string value = line.substr(colon + 1);
        if (!value.empty() && value[0] == ' ') value.erase(0, 1);
        fields[line.substr(0, colon)] = value;
    }
    for (const char* key : {"kind", "root", "vertices", "costs"})
        if (!fields.count(key)) throw ParseError(std::string("certificate: missing field ") + key);
    GoodCertificate cert;
    if (fields["kind"] == "strong")
        cert.kind = GoodnessKind::Strong;
    else if (fields["kind"] == "central")
        cert.kind = GoodnessKind::Central;
    else
        throw ParseError("certificate: unknown kind \"" + fields["kind"] + "\"");
    if (fields["root"] != "-") {
        std::size_t r = 0;
        if (!parse_index(fields["root"], r)) throw ParseError("certificate: bad root");
        cert.root = r;
    }
    for (const auto& w : split_words(fields["vertices"])) {
        std::size_t v = 0;
        if (!parse_index(w, v)) throw ParseError("certificate: bad vertex \"" + w + "\"");
        cert.vertices.push_back(v);
    }
    for (const auto& w : split_words(fields["costs"])) {
        std::int64_t x = 0;
        auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), x);
        if (ec != std::errc{} || ptr != w.data() + w.size()) throw ParseError("certificate: bad cost \"" + w + "\"");
        cert.costs.push_back(x);
    }
    if (cert.costs.size() != cert.vertices.size()) throw ParseError("certificate: vertex and cost counts differ");
    return cert;
}

} // namespace cvd
