#pragma once

#include <iosfwd>

namespace sgc::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kSuccess = 0,
  kOperationalError = 1,
  kHypothesisRejected = 2,
  kBudgetExhausted = 3,
};

/// Runs one invocation; normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgc::cli
