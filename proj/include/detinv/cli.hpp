#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace detinv::cli {

/// Process exit codes.
enum ExitCode : int {
  kPass = 0,      // verdict positive, identity holds
  kNegative = 1,  // mathematical negative: mismatch, NotFPure, NotDetected
  kUsage = 2,     // bad flags or unparsable input
  kResource = 3,  // a resource cap was exceeded
  kInternal = 4,  // a result failed its own re-verification
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace detinv::cli
