#pragma once

#include <string>

#include "config.hpp"
#include "report.hpp"

namespace valueset::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kCap = 3 };

struct Outcome {
  Json report;          // stdout
  std::string csv;      // spacings histogram, empty otherwise
  std::string summary;  // stderr
  int exit_code = kOk;
};

// Validates, dispatches and maps library errors to exit codes. Never throws
// for bad input.
Outcome run(const RunConfig& config);

// Empty outcome carrying the version and resolved config.
Outcome start_report(const RunConfig& config);

Outcome cmd_image(const RunConfig& config);
Outcome cmd_correlate(const RunConfig& config);
Outcome cmd_spacings(const RunConfig& config);
Outcome cmd_critical(const RunConfig& config);
Outcome cmd_nk(const RunConfig& config);
Outcome cmd_verify(const RunConfig& config);

}  // namespace valueset::cli
