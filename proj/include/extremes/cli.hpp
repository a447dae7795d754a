#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extremes {

// Exit codes, most severe last. Batch runs return the largest one seen.
enum ExitCode : int {
  kExitValid = 0,
  kExitInvalid = 1,
  kExitParse = 2,
  kExitUnsupported = 3,
  kExitBudget = 4,
  kExitDisagreement = 5,
};

// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extremes
