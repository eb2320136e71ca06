#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxlen::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,  // --verify or --assert-match disagreement, or an internal check
  kInvalid = 2,   // parse or validation failure
  kUnsupported = 3,
  kBudget = 4,
};

/// Runs one command line (args excludes the program name) and returns its
/// exit code. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace coxlen::cli
