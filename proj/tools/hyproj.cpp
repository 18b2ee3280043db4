#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hyproj/acceptance.hpp"
#include "hyproj/config.hpp"
#include "hyproj/report.hpp"
#include "hyproj/scenarios.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kConfigError = 2;

struct RunArgs {
  std::string id;
  std::string config;
  std::string csv;
  std::string plot;
  std::optional<int> n_max;
};

void print_report(const hyproj::ScenarioReport& r) {
  std::printf("scenario %s: %zu rows\n", r.id.c_str(), r.rows.size());
  if (r.increase)
    std::printf("  first increase N = %zu, %zu non-increasing pairs\n", r.increase->first_increase,
                r.increase->violations.size());
  if (r.tail) std::printf("  tail %.17g\n", *r.tail);
  if (r.target) std::printf("  target %.17g\n", *r.target);
  if (r.eventually_nondecreasing)
    std::printf("  eventually non-decreasing: %s\n", *r.eventually_nondecreasing ? "yes" : "no");
  for (const hyproj::Check& c : r.checks)
    std::printf("  %s %s%s%s\n", c.pass ? "ok  " : (c.informational ? "info" : "FAIL"), c.name.c_str(),
                c.detail.empty() ? "" : ": ", c.detail.c_str());
}

int run(const RunArgs& args) {
  const hyproj::ScenarioInfo& info = hyproj::find_scenario(args.id);
  hyproj::ScenarioConfig cfg = args.config.empty() ? info.defaults : hyproj::load_config(args.config, info.defaults);
  if (args.n_max) {
    if (*args.n_max < cfg.n_range.first) throw hyproj::ConfigError("--n-max below the start of n_range");
    cfg.n_range.last = *args.n_max;
  }
  const hyproj::ScenarioReport report = hyproj::run_scenario(info, cfg, hyproj::seed_from_env());
  print_report(report);
  if (!args.csv.empty()) hyproj::emit_csv(report, args.csv);
  if (!args.plot.empty()) hyproj::emit_plot(report, args.plot);
  return report.passed() ? kPass : kViolation;
}

int verify(const std::string& out_dir) {
  const std::uint64_t seed = hyproj::seed_from_env();
  bool all = true;
  for (const hyproj::CriterionResult& r : hyproj::run_acceptance(seed)) {
    std::puts(hyproj::format_criterion(r).c_str());
    all = all && r.pass;
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const hyproj::ScenarioInfo& info : hyproj::scenario_catalog()) {
      const hyproj::ScenarioReport report = hyproj::run_scenario(info, info.defaults, seed);
      const std::filesystem::path base = std::filesystem::path(out_dir) / info.id;
      hyproj::emit_csv(report, base.string() + ".csv");
      hyproj::emit_plot(report, base.string() + ".svg");
    }
  }
  return all ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projections of holomorphic orbits onto curves in the right half-plane"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run_cmd = app.add_subcommand("run", "Run one scenario and report its checks");
  run_cmd->add_option("scenario", run_args.id, "Scenario id (see 'list')")->required();
  run_cmd->add_option("--config", run_args.config, "JSON overrides for the scenario defaults");
  run_cmd->add_option("--csv", run_args.csv, "Write the trace as CSV");
  run_cmd->add_option("--plot", run_args.plot, "Write an SVG line chart");
  run_cmd->add_option("--n-max", run_args.n_max, "Last orbit index");

  CLI::App* list_cmd = app.add_subcommand("list", "List scenario ids");

  std::string show_id;
  CLI::App* show_cmd = app.add_subcommand("show", "Print a scenario's default configuration");
  show_cmd->add_option("scenario", show_id, "Scenario id")->required();

  std::string out_dir;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
  verify_cmd->add_option("--out-dir", out_dir, "Also write every scenario's CSV and SVG here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kConfigError;
  }

  try {
    if (list_cmd->parsed()) {
      for (const hyproj::ScenarioInfo& s : hyproj::scenario_catalog())
        std::printf("%-26s %s\n", s.id.c_str(), s.summary.c_str());
      return kPass;
    }
    if (show_cmd->parsed()) {
      std::puts(hyproj::dump_config(hyproj::find_scenario(show_id).defaults).c_str());
      return kPass;
    }
    if (run_cmd->parsed()) return run(run_args);
    if (verify_cmd->parsed()) return verify(out_dir);
  } catch (const hyproj::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  }
  return kPass;
}
