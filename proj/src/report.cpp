#include "anosov/report.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

namespace anosov {
namespace {

constexpr std::string_view kCsvHeader = "experiment,case_id,t,s,j,measured,expected,abs_error,rel_error,pass";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_num(double v) { return std::isfinite(v) ? num(v) : "null"; }

std::string json_str(const std::string& s) { return nlohmann::json(s).dump(); }

void check_field(const std::string& field) {
  if (field.find_first_of(",\n\r") != std::string::npos) {
    throw std::invalid_argument("report field contains a separator: '" + field + "'");
  }
}

double parse_double(const std::string& text, int line) {
  if (text.empty()) throw std::invalid_argument("csv line " + std::to_string(line) + ": empty number");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) {
    throw std::invalid_argument("csv line " + std::to_string(line) + ": bad number '" + text + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

CaseRecord make_case(std::string experiment, std::string case_id, double t, double s, int j, double measured,
                     double expected, double tolerance, bool pass) {
  CaseRecord r;
  r.experiment = std::move(experiment);
  r.case_id = std::move(case_id);
  r.t = t;
  r.s = s;
  r.j = j;
  r.measured = measured;
  r.expected = expected;
  r.abs_error = std::abs(measured - expected);
  r.rel_error = expected == 0.0 ? r.abs_error : r.abs_error / std::abs(expected);
  r.tolerance = tolerance;
  r.pass = pass && std::isfinite(measured);
  return r;
}

bool ExperimentReport::pass() const { return failures() == 0; }

std::size_t ExperimentReport::failures() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const CaseRecord& r) { return !r.pass; }));
}

std::string format_csv(const ExperimentReport& report) {
  std::string out;
  if (!report.identity.empty()) {
    if (report.identity.find_first_of("\n\r") != std::string::npos) throw std::invalid_argument("identity spans lines");
    out += "# " + report.identity + "\n";
  }
  out += kCsvHeader;
  out += '\n';
  for (const auto& r : report.records) {
    check_field(r.experiment);
    check_field(r.case_id);
    out += r.experiment + ',' + r.case_id + ',' + num(r.t) + ',' + num(r.s) + ',' + std::to_string(r.j) + ',' +
           num(r.measured) + ',' + num(r.expected) + ',' + num(r.abs_error) + ',' + num(r.rel_error) + ',' +
           (r.pass ? "true" : "false") + '\n';
  }
  return out;
}

std::string format_json(const ExperimentReport& report) {
  std::string out = "{\n  \"experiment\": " + json_str(report.experiment) + ",\n";
  out += "  \"identity\": " + json_str(report.identity) + ",\n";
  out += std::string("  \"pass\": ") + (report.pass() ? "true" : "false") + ",\n";
  out += "  \"records\": [";
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    out += i == 0 ? "\n" : ",\n";
    out += "    {\"experiment\": " + json_str(r.experiment) + ", \"case_id\": " + json_str(r.case_id) +
           ", \"t\": " + json_num(r.t) + ", \"s\": " + json_num(r.s) + ", \"j\": " + std::to_string(r.j) +
           ", \"measured\": " + json_num(r.measured) + ", \"expected\": " + json_num(r.expected) +
           ", \"abs_error\": " + json_num(r.abs_error) + ", \"rel_error\": " + json_num(r.rel_error) +
           ", \"pass\": " + (r.pass ? "true" : "false") + "}";
  }
  out += report.records.empty() ? "]" : "\n  ]";
  if (!report.extra_key.empty()) out += ",\n  " + json_str(report.extra_key) + ": " + report.extra_json;
  out += "\n}\n";
  return out;
}

std::string format_report(const ExperimentReport& report, ReportFormat format) {
  return format == ReportFormat::csv ? format_csv(report) : format_json(report);
}

ExperimentReport parse_csv(std::string_view text) {
  ExperimentReport report;
  int line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) throw std::invalid_argument("csv text must end with a newline");
    const std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl + 1);
    ++line_no;
    const std::string where = "csv line " + std::to_string(line_no);

    if (!header_seen) {
      if (line_no == 1 && line.starts_with("# ")) {
        report.identity = std::string(line.substr(2));
        continue;
      }
      if (line != kCsvHeader) throw std::invalid_argument(where + ": expected the column header");
      header_seen = true;
      continue;
    }
    const auto f = split(line);
    if (f.size() != 10) throw std::invalid_argument(where + ": expected 10 fields");
    CaseRecord r;
    r.experiment = f[0];
    r.case_id = f[1];
    r.t = parse_double(f[2], line_no);
    r.s = parse_double(f[3], line_no);
    std::size_t used = 0;
    try {
      r.j = std::stoi(f[4], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != f[4].size()) throw std::invalid_argument(where + ": bad j '" + f[4] + "'");
    r.measured = parse_double(f[5], line_no);
    r.expected = parse_double(f[6], line_no);
    r.abs_error = parse_double(f[7], line_no);
    r.rel_error = parse_double(f[8], line_no);
    if (f[9] == "true") {
      r.pass = true;
    } else if (f[9] == "false") {
      r.pass = false;
    } else {
      throw std::invalid_argument(where + ": pass must be true or false");
    }
    if (report.experiment.empty()) report.experiment = r.experiment;
    report.records.push_back(std::move(r));
  }
  if (!header_seen) throw std::invalid_argument("csv text has no column header");
  return report;
}

void write_report(const ExperimentReport& report, const std::string& path, ReportFormat format) {
  const std::string text = format_report(report, format);
  if (path.empty()) {
    std::cout << text << std::flush;
    if (!std::cout) throw std::runtime_error("cannot write report to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

void emit_curve(std::span<const CaseRecord> records, const std::string& path, ReportFormat format) {
  if (records.empty()) throw std::invalid_argument("emit_curve needs at least one record");
  ExperimentReport report;
  report.experiment = records.front().experiment;
  report.records.assign(records.begin(), records.end());
  write_report(report, path, format);
}

}  // namespace anosov
