#ifndef MINTB_CLI_HPP
#define MINTB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mintb::cli {

// Exit codes shared by every subcommand.
enum ExitCode {
  kOk = 0,
  kFailure = 1,         // false verdict, infeasible request, search cap hit
  kParseError = 2,
  kNotSeriesParallel = 3,
  kInvalidFlow = 4,     // infeasible/non-optimal flow, length below minimum
  kInternalError = 5,   // a self-check failed after solving
};

// Runs one invocation. `args` excludes the program name. Everything
// deterministic goes to `out`; diagnostics and timing go to `err`. Instance
// arguments accept "-" for stdin.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace mintb::cli

#endif
