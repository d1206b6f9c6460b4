#ifndef LF2HH_FRONTEND_CLI_HPP
#define LF2HH_FRONTEND_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lf2hh::frontend {

enum ExitCode : int {
  exit_ok = 0,
  exit_check_failed = 1,
  exit_no_answer = 2,
  exit_budget = 3,
  exit_usage = 64,
  exit_file = 66,
};

// Command dispatch for `check`, `translate`, `solve` and `bench`. `args`
// excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace lf2hh::frontend

#endif  // LF2HH_FRONTEND_CLI_HPP
