// anosovlab: run a verification suite and write its defect table.
//
// Exit status: 0 all cases pass, 1 some case failed, 2 usage, config or I/O error.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "anosov/config.hpp"
#include "anosov/experiments.hpp"
#include "anosov/report.hpp"

namespace {

constexpr int kUsageError = 2;

std::uint64_t parse_seed(const std::string& text, const char* origin) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string(origin) + " is not a non-negative integer: '" + text + "'");
  }
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks of hyperbolic flows, their quantum counterparts and the finite-spectrum no-go"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "Print experiment names and the identity each one checks");

  auto* run = app.add_subcommand("run", "Run one experiment and write its report");
  std::string experiment, config_path, out_path, format_text, seed_text;
  run->add_option("--experiment", experiment, "Experiment name (see `anosovlab list`)")->required();
  run->add_option("--config", config_path, "Config file (key = value, optional [experiment] sections)");
  run->add_option("--seed", seed_text, "RNG seed; overrides the config file, which overrides ANOSOVLAB_SEED");
  run->add_option("--out", out_path, "Report path; standard output if omitted");
  run->add_option("--format", format_text, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "anosovlab: " << e.what() << '\n';
    return kUsageError;
  }

  if (list->parsed()) {
    for (const auto& info : anosov::suite_catalog()) std::cout << info.name << "\t" << info.identity << '\n';
    return 0;
  }

  anosov::ExperimentReport report;
  anosov::ExperimentConfig cfg;
  try {
    cfg = anosov::default_config(experiment);
    if (const char* env = std::getenv("ANOSOVLAB_SEED"); env != nullptr && *env != '\0') {
      cfg.seed = parse_seed(env, "ANOSOVLAB_SEED");
    }
    if (!config_path.empty()) anosov::apply_config_text(cfg, slurp(config_path));
    if (!seed_text.empty()) cfg.seed = parse_seed(seed_text, "--seed");
    if (!out_path.empty()) cfg.output_path = out_path;
    if (!format_text.empty()) cfg.format = anosov::parse_format(format_text);
    report = anosov::run(cfg);
    anosov::write_report(report, cfg.output_path, cfg.format);
  } catch (const std::exception& e) {
    std::cerr << "anosovlab: " << e.what() << '\n';
    return kUsageError;
  }

  std::fprintf(stderr, "anosovlab: %s %s (%zu cases, %zu failed, seed %llu, %.3f s)\n", cfg.experiment.c_str(),
               report.pass() ? "PASS" : "FAIL", report.records.size(), report.failures(),
               static_cast<unsigned long long>(cfg.seed), report.duration_seconds);
  return report.pass() ? 0 : 1;
}
