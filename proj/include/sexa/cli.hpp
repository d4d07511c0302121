// include/sexa/cli.hpp - Command-line front end.

#pragma once

#include <string>
#include <vector>

namespace sexa::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsage = 2,
  kVerificationFailed = 3,
};

struct RunResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Runs one command. argv[0] is the program name.
RunResult run(const std::vector<std::string>& argv);

}  // namespace sexa::cli
