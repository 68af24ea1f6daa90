#pragma once

// Command-line frontend. Exit codes: 0 all checks pass, 1 a check failed,
// 2 bad input.

#include <ostream>
#include <string>
#include <vector>

namespace potentia {

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace potentia
