#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vflab/config.hpp"

namespace vflab {

/// One named numeric check of an experiment: measured value against an
/// expectation. `tol` empty means informational (always passes, reported
/// for the record).
struct CheckResult {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  std::optional<double> tol;
  bool pass = true;
};

struct ExperimentResult {
  std::string experiment;
  std::vector<CheckResult> checks;
  double wall_time = 0.0;
  std::filesystem::path output_dir;

  bool all_pass() const;
};

/// Registered experiment names with one-line summaries, in run order.
std::vector<std::pair<std::string, std::string>> list_experiments();

/// Key schema: global keys plus per-experiment keys, with defaults, rendered
/// for --print-schema.
std::string schema_text();

/// Run one experiment from a parsed config. Writes CSV/JSON outputs under
/// the output directory (config `output_dir`, overridable) and returns the
/// check list. Throws UnknownExperiment / ConfigError on bad input.
ExperimentResult run_experiment(const Config& config,
                                const std::string& output_dir_override = "");

/// Serialize the result (checks + wall time) as summary.json in output_dir.
void write_summary(const ExperimentResult& result);

}  // namespace vflab
