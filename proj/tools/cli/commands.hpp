#pragma once

#include <iosfwd>

namespace secretary::cli {

enum ExitCode : int { kOk = 0, kRuntimeError = 1, kUsageError = 2, kBudgetError = 3 };

/// Entry point of the secretary tool. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace secretary::cli
