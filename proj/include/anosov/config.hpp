#pragma once

// Experiment configuration: built-in defaults per suite, overridden by a flat
// key=value file with optional [experiment] sections, then by CLI flags.
//
//   seed = 7              # applies to every experiment
//   [geodesic]
//   t_min = -3
//   tolerance.defect = 1e-12

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace anosov {

enum class ReportFormat { csv, json };

ReportFormat parse_format(std::string_view text);
std::string_view format_name(ReportFormat f);

struct ExperimentConfig {
  std::string experiment;
  std::uint64_t seed = 1;
  double t_min = 0.0;
  double t_max = 0.0;
  double s_min = 0.0;
  double s_max = 0.0;
  int samples = 1;
  std::map<std::string, double> tolerances;
  std::string output_path;  ///< empty: standard output
  ReportFormat format = ReportFormat::csv;

  /// Named tolerance; throws std::invalid_argument if the suite has none by that name.
  double tolerance(const std::string& name) const;

  /// samples >= 1, t_min <= t_max, s_min <= s_max, tolerances finite and >= 0.
  void validate() const;
};

/// Names accepted by run(), in listing order.
const std::vector<std::string>& experiment_names();

/// Throws std::invalid_argument for an unknown experiment.
ExperimentConfig default_config(const std::string& experiment);

/// Apply the global keys, then the [experiment] section, of a config text.
/// Throws std::invalid_argument (with the line number) on malformed input.
void apply_config_text(ExperimentConfig& cfg, std::string_view text);

}  // namespace anosov
