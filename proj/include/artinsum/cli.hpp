#pragma once

// Command-line front end shared by the artinsum executable and its tests.

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace artinsum::cli {

enum ExitCode : int {
  OK = 0,
  IO = 1,
  PARSE = 2,
  NOT_ARTINIAN = 3,
  NOT_GORENSTEIN = 4,
  BAD_SOCLE = 5,
  PRECONDITION = 6,
  RESOURCE = 7,
  USAGE = 64,
  INTERNAL = 70,
};

/// Exit code for an exception escaping a command.
int exit_code(const std::exception& e);

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artinsum::cli
