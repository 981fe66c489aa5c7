#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kerncalc::cli {

/// Runs one invocation (args excludes the program name). Exit codes:
/// 0 success, 1 library precondition/validation failure (JSON error on out),
/// 2 usage, I/O or parse failure (message on err).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kerncalc::cli
