#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gammalab::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 counterexample found, 2 input error, 3 cap or budget exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammalab::cli
