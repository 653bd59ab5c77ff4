#pragma once

// Named verification suites. Each one sweeps a grid from the config, checks a
// single identity case by case, and returns the records in enumeration order.

#include <string>
#include <vector>

#include "anosov/config.hpp"
#include "anosov/report.hpp"

namespace anosov {

struct SuiteInfo {
  std::string name;
  std::string identity;  ///< the relation checked, as printed by `anosovlab list`
};

/// All suites, in the order of experiment_names().
const std::vector<SuiteInfo>& suite_catalog();

/// Deformation parameter used by the quantum suites (matches the N = 16 clock-shift oracle).
double default_gamma();

/// Validates the config and runs the suite. Throws std::invalid_argument on a
/// bad config. Timing goes into duration_seconds only.
ExperimentReport run(const ExperimentConfig& cfg);

}  // namespace anosov
