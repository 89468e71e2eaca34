#pragma once

#include <iosfwd>

namespace gwcb::cli {

/// Exit codes of run().
enum ExitCode : int {
  ok = 0,
  mismatch = 1,
  invalid_input = 2,
};

/// Parses argv and runs one subcommand, writing results to `out` and
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gwcb::cli
