#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fanosim {

/// Entry point of the fanosim command line. `args` excludes the program name.
/// Returns the process exit code: 0 on success, 1 on runtime failure, and
/// CLI11's code (nonzero) on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fanosim
