#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumcomp {

/// Runs one CLI invocation (args without the program name) against the
/// given streams. Exit codes: 0 success, 1 relation does not hold / zero
/// results, 2 usage or input error, 3 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumcomp
