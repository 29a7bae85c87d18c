#pragma once

#include <chrono>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cvd/cost.hpp"
#include "cvd/goodness.hpp"

namespace cvd {

// Lines "v p/q" or "v k"; vertices without a line cost 1. Blank lines and lines
// starting with '#' are skipped.
CostFn parse_costs(std::istream& in, std::size_t n);
CostFn parse_costs(std::string_view text, std::size_t n);
std::string write_costs(const CostFn& c);

std::string read_file(const std::string& path); // ParseError when unreadable
void write_file(const std::string& path, std::string_view text);

// Ordered "key: value" lines. Timing fields are kept apart and always printed last.
class Report {
public:
    void add(std::string key, std::string value);
    void add_timing(std::string key, std::chrono::duration<double> elapsed);
    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
    std::vector<std::pair<std::string, std::string>> timing_;
};

// kind / root / vertices / costs record.
std::string write_certificate(const GoodCertificate& cert);
GoodCertificate parse_certificate(std::string_view text);

} // namespace cvd
