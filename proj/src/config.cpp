#include "anosov/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace anosov {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, const std::string& where) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw std::invalid_argument(where + ": cannot parse '" + std::string(text) + "'");
  return value;
}

bool known_experiment(std::string_view name) {
  const auto& names = experiment_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

ReportFormat parse_format(std::string_view text) {
  if (text == "csv") return ReportFormat::csv;
  if (text == "json") return ReportFormat::json;
  throw std::invalid_argument("format must be csv or json, got '" + std::string(text) + "'");
}

std::string_view format_name(ReportFormat f) { return f == ReportFormat::csv ? "csv" : "json"; }

double ExperimentConfig::tolerance(const std::string& name) const {
  auto it = tolerances.find(name);
  if (it == tolerances.end()) throw std::invalid_argument("experiment " + experiment + " has no tolerance '" + name + "'");
  return it->second;
}

void ExperimentConfig::validate() const {
  if (!known_experiment(experiment)) throw std::invalid_argument("unknown experiment '" + experiment + "'");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (!(t_min <= t_max)) throw std::invalid_argument("t_min must not exceed t_max");
  if (!(s_min <= s_max)) throw std::invalid_argument("s_min must not exceed s_max");
  for (const auto& [name, tol] : tolerances) {
    if (!std::isfinite(tol) || tol < 0.0) throw std::invalid_argument("tolerance '" + name + "' must be finite and >= 0");
  }
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"cat-classical", "cat-divergence", "cat-ergodic",
                                              "geodesic",      "cat-quantum",    "quantum-divergence",
                                              "nogo-sylvester", "nogo-search",   "nogo-affine"};
  return names;
}

ExperimentConfig default_config(const std::string& experiment) {
  ExperimentConfig c;
  c.experiment = experiment;
  if (experiment == "cat-classical") {
    c.t_min = -10, c.t_max = 10, c.s_min = -1, c.s_max = 1, c.samples = 5;
    c.tolerances = {{"conjugation", 1e-9}, {"differential", 1e-9}, {"control", 0.1}};
  } else if (experiment == "cat-divergence") {
    c.t_min = 0, c.t_max = 15, c.samples = 1;
    c.tolerances = {{"slope", 1e-3}, {"distance_rel", 1e-4}};
  } else if (experiment == "cat-ergodic") {
    c.samples = 10;
    c.tolerances = {{"bound_factor", 5.0}, {"histogram_sigma", 5.0}};
  } else if (experiment == "geodesic") {
    c.t_min = -5, c.t_max = 5, c.s_min = -2, c.s_max = 2, c.samples = 11;
    c.tolerances = {{"defect", 1e-12}, {"invariance", 1e-10}, {"differential", 1e-8}};
  } else if (experiment == "cat-quantum") {
    c.t_min = -6, c.t_max = 6, c.s_min = -1, c.s_max = 1, c.samples = 50;
    c.tolerances = {{"defect", 1e-8}, {"control", 0.1}};
  } else if (experiment == "quantum-divergence") {
    c.t_min = -6, c.t_max = 6, c.samples = 20;
    c.tolerances = {{"relative", 1e-8}};
  } else if (experiment == "nogo-sylvester") {
    c.samples = 100;
    c.tolerances = {{"sigma_margin", 1e-9}};
  } else if (experiment == "nogo-search") {
    c.t_min = -2, c.t_max = 2, c.s_min = -1, c.s_max = 1, c.samples = 200;
    c.tolerances = {{"min_defect", 0.05}, {"stability", 0.1}, {"control", 1e-12}};
  } else if (experiment == "nogo-affine") {
    c.samples = 4;
    c.tolerances = {{"identity", 1e-10}};
  } else {
    throw std::invalid_argument("unknown experiment '" + experiment + "'");
  }
  return c;
}

void apply_config_text(ExperimentConfig& cfg, std::string_view text) {
  std::string section;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const std::string where = "config line " + std::to_string(line_no);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw std::invalid_argument(where + ": unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!known_experiment(section)) throw std::invalid_argument(where + ": unknown experiment section '" + section + "'");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument(where + ": expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!section.empty() && section != cfg.experiment) continue;

    if (key == "seed") {
      cfg.seed = parse_number<std::uint64_t>(value, where);
    } else if (key == "t_min") {
      cfg.t_min = parse_number<double>(value, where);
    } else if (key == "t_max") {
      cfg.t_max = parse_number<double>(value, where);
    } else if (key == "s_min") {
      cfg.s_min = parse_number<double>(value, where);
    } else if (key == "s_max") {
      cfg.s_max = parse_number<double>(value, where);
    } else if (key == "samples") {
      cfg.samples = parse_number<int>(value, where);
    } else if (key == "output") {
      cfg.output_path = std::string(value);
    } else if (key == "format") {
      cfg.format = parse_format(value);
    } else if (key.starts_with("tolerance.")) {
      const std::string name = key.substr(10);
      if (!cfg.tolerances.contains(name)) {
        // Global keys may name tolerances of other suites; sections may not.
        if (!section.empty()) throw std::invalid_argument(where + ": " + cfg.experiment + " has no tolerance '" + name + "'");
        continue;
      }
      cfg.tolerances[name] = parse_number<double>(value, where);
    } else {
      throw std::invalid_argument(where + ": unknown key '" + key + "'");
    }
  }
}

}  // namespace anosov
