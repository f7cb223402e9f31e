// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace rankecp {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitDecodeFailure = 1, kExitInvalidInput = 2 };

struct RunConfig {
  std::string command;
  std::string input, output;  ///< empty: stdin is never read, stdout is written
  std::uint64_t seed = 1;
  int verbosity = 0;
};

/// Runs one subcommand. JSON goes to `out` (or the --out file), diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace rankecp
