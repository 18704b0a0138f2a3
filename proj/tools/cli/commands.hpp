#pragma once

#include <iosfwd>

namespace wittlab::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIntegrality = 3 };

// Parses argv and runs one subcommand; results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wittlab::cli
