#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hatgame {

enum ExitStatus : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitCapacity = 2,
  kExitInternal = 3,
};

// args[0] is the program name. Exactly one subcommand per call:
// enumerate, solve, classify, patterns, dominance, strategy, simulate,
// min-das, complexity, region-map.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hatgame
