#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace autz {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_parse = 2,
  exit_precondition = 3,
  exit_suite_failure = 4,
};

/// Runs one command. `args` excludes the program name; matrix input is read
/// from `in` unless --file is given. JSON goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace autz
