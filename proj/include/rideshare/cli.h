#ifndef RIDESHARE_CLI_H_
#define RIDESHARE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace rideshare {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // bad flags, unreadable or invalid input
  kExitInfeasible = 2,  // infeasible ride, or no ride exists
  kExitBudget = 3,      // oracle state budget exceeded
  kExitCostMismatch = 4,  // verify: feasible ride with a different cost
};

// Runs one command. `args` excludes the program name, e.g.
// {"solve", "--input", "x.json"}.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace rideshare

#endif  // RIDESHARE_CLI_H_
