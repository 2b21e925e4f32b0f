#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dit/cli/config.hpp"

namespace dit::cli {

enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitOracleFailed = 2 };

struct RunResult {
  int exit_code = kExitOk;
  std::vector<std::string> files;  ///< relative to output_dir, in write order
};

/// Executes one command and writes its outputs below config.output_dir.
/// Diagnostics go to `log`. Never throws for bad input; reports kExitInvalid.
RunResult run(const RunConfig& config, std::ostream& log);

}  // namespace dit::cli
