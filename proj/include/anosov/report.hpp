#pragma once

// Per-case defect tables. CSV columns are fixed:
//   experiment,case_id,t,s,j,measured,expected,abs_error,rel_error,pass
// with numbers in %.17g, so parse_csv(format_csv(r)) reproduces every double
// and format_csv(parse_csv(text)) == text for any emitted text.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anosov/config.hpp"

namespace anosov {

struct CaseRecord {
  std::string experiment;
  std::string case_id;
  double t = 0.0;
  double s = 0.0;
  int j = 0;  ///< horocycle index, 0 when not applicable
  double measured = 0.0;
  double expected = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;  ///< not serialized
  bool pass = false;
};

/// Fills abs_error = |measured - expected| and rel_error = abs_error / |expected|
/// (abs_error itself when expected is 0). The pass flag is the caller's verdict.
CaseRecord make_case(std::string experiment, std::string case_id, double t, double s, int j, double measured,
                     double expected, double tolerance, bool pass);

struct ExperimentReport {
  std::string experiment;
  std::string identity;  ///< the relation the suite checks, written into the header
  std::vector<CaseRecord> records;
  std::string extra_json;  ///< optional raw JSON value stored under "extra_key"
  std::string extra_key;
  double duration_seconds = 0.0;  ///< not serialized; reports stay byte-stable

  bool pass() const;
  std::size_t failures() const;
};

std::string format_csv(const ExperimentReport& report);
std::string format_json(const ExperimentReport& report);
std::string format_report(const ExperimentReport& report, ReportFormat format);

/// Inverse of format_csv. Throws std::invalid_argument on malformed text.
ExperimentReport parse_csv(std::string_view text);

/// Write to path, or to standard output when path is empty.
/// Throws std::runtime_error on I/O failure.
void write_report(const ExperimentReport& report, const std::string& path, ReportFormat format);

/// Write a bare record table. Throws std::invalid_argument on an empty set and
/// std::runtime_error on I/O failure.
void emit_curve(std::span<const CaseRecord> records, const std::string& path, ReportFormat format);

}  // namespace anosov
