#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antimagic::cli {

enum ExitCode : int {
  kPass = 0,
  kVerificationFailed = 1,
  kRadiusTooLarge = 2,   // orient-r2
  kInvalidDocument = 2,  // verify
  kUsage = 3,
  kIo = 4,
  kFormat = 5,
  kPrecondition = 6,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antimagic::cli
