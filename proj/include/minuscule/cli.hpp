#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minuscule {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 bad input or exceeded bound, 2 internal invariant violation, 3 failed
/// verification.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minuscule
