#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oig {

// Runs one CLI invocation. Exit codes: 0 success or pass, 1 validation
// failure, 2 usage/format/cap errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oig
