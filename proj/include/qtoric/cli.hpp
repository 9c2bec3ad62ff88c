#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtoric {

// Command-line entry point; returns the process exit status. Results go to
// out, machine-readable error JSON to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtoric
