#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domroots {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitCapacity = 3,
  kExitInvariant = 4,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`; `in` feeds `verify --cert -`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace domroots
