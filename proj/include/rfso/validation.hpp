#pragma once

// Shared validation registry: every release acceptance check, runnable both
// from the command-line `validate` subcommand and from the acceptance test
// binary.  The report text is deterministic for a fixed seed (wall-clock
// measurements are returned separately so they never perturb the bytes).

#include <cstdint>
#include <string>
#include <vector>

#include "rfso/curve.hpp"

namespace rfso::validation {

struct ValidationOptions {
  std::uint64_t seed = 20260819;
  // Sample budget for the standard checks; the heavy moment/capacity/fading
  // cross-checks use ten times this figure.  Statistical thresholds that are
  // calibrated to the default budget are rescaled when it changes.
  std::uint64_t base_samples = 1'000'000;
};

struct CheckResult {
  std::string id;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

// Wall-clock measurements for the runtime budgets; reported by the acceptance
// binary, never written into the deterministic report text.
struct Timings {
  double identity_s = 0.0;
  double ks_max_config_s = 0.0;
  double pdf_fd_s = 0.0;
  double egbmgf_point_s = 0.0;
  double total_s = 0.0;
};

struct ValidationOutputs {
  std::vector<CheckResult> checks;
  std::vector<std::string> info;  // annotation lines, each starting with "# "
  Curve capacity_trend;           // capacity vs xi companion table
  Timings timings;
  bool all_pass = false;

  // One line per check: "CHECK-ID | measured | threshold | PASS/FAIL",
  // followed by the annotation lines and a "# SUMMARY" line.
  std::string report_text() const;
  // CSV rendering of capacity_trend.
  std::string csv_text() const;
};

ValidationOutputs run_validation(const ValidationOptions& opts = {});

}  // namespace rfso::validation
