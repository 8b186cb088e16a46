#pragma once

#include <iosfwd>

#include "cli/config.hpp"

namespace cgq::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 1,
  kExitRungFailed = 2,
  kExitInconclusive = 3,
};

/// Runs the ladder and writes the report (JSON) or final rule (CSV) to
/// cfg.out, or to `out` when cfg.out is empty. The bit sequence and any
/// diagnostics go to `err`.
int cmd_rule(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Prints μ_r at cfg.bits.
int cmd_moments(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cgq::cli
