#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cvd {

// Verbs: solve, exact, certify, gap, gen, bench. `args` excludes the program name.
// Returns 0 on success, 1 on input errors, 2 on internal invariant violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cvd
