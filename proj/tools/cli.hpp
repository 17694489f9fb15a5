#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wefhouse::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kFound = 0,
  kError = 1,
  kNotFound = 2,
  kCapExceeded = 3,
};

/// Runs the command line `args` (args[0] is the program name). JSON reports go
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wefhouse::cli
