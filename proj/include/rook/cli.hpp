#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rook::cli {

// Runs one CLI invocation (args excludes the program name). Exit codes:
// 0 for any successfully computed result, 2 for parse or usage errors,
// 1 for internal invariant failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rook::cli
