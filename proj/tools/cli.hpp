#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ontolab::cli {

/// Process exit codes.
enum ExitCode : int {
  kPass = 0,
  kConditionFail = 1,
  kInputError = 2,
  kNumericalFailure = 3,
};

/// Runs one command line. Reports go to --out when given, otherwise to
/// `out`; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ontolab::cli
