#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rcx::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,  // also: is a member
  kNotMember = 1,
  kInputError = 2,
  kNoModel = 3,
  kOracleDisagreement = 4,
};

/// Runs one `rcx` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcx::cli
