#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "specsum/errors.hpp"

namespace specsum::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitConfigError = 2,
  kExitInconclusive = 3,
  kExitIoError = 4,
  kExitUnsupported = 5,
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specsum::cli
