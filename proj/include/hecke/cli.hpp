#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hecke/verify.hpp"

namespace hecke::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kHypothesis = 2,
  kIo = 3,
  kVerifyFailed = 4,
};

/// Runs the command line `args` (without the program name). Machine output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `verify` with caller-supplied formulas (the CLI always uses the real ones).
int run_verify_command(const VerifyOptions& options, std::ostream& out, std::ostream& err);

}  // namespace hecke::cli
