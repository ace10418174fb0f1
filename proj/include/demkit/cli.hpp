#ifndef DEMKIT_CLI_HPP
#define DEMKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace demkit {

/// Exit codes shared by every command.
enum ExitCode : int {
  exit_ok = 0,
  exit_refuted = 1,
  exit_usage = 2,
  exit_hypothesis = 3,
  exit_inconclusive = 4,
};

/// Runs the demkit command line with `args` (program name excluded).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace demkit

#endif
