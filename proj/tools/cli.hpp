#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pvdsteg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCapacity = 2,
  kIo = 3,
  kSelftestFailed = 4,
};

// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pvdsteg::cli
