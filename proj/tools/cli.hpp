#pragma once

#include <ostream>

namespace spincalc::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kMismatch = 3,
  kInvariant = 4,
};

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace spincalc::cli
