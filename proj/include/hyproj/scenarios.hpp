#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyproj/config.hpp"
#include "hyproj/sequence.hpp"

namespace hyproj {

/// One line of a scenario trace. `value` is the scenario's tracked quantity,
/// for most scenarios d_H(w, pi_n).
struct Row {
  int n;
  HalfPlanePoint z;
  std::optional<double> t_star;
  std::optional<HalfPlanePoint> pi;
  double value;
};

struct Check {
  std::string name;
  bool pass;
  std::string detail;
  bool informational = false;  // recorded, but outside the pass/fail verdict
};

struct ScenarioReport {
  std::string id;
  std::vector<Row> rows;
  std::vector<Check> checks;
  std::optional<IncreaseAnalysis> increase;  // violation indices are in n, not row positions
  std::optional<double> tail;
  std::optional<double> target;
  std::optional<bool> eventually_nondecreasing;
  std::string value_label = "d_H(w, pi_n)";

  bool passed() const;
  const Check* first_failure() const;
};

enum class ScenarioKind { Monotonicity, TotalSpeed, Closeness, Slopes, LogCos, Example, ModulusGrowth, ImGrowth };

struct ScenarioInfo {
  std::string id;
  ScenarioKind kind;
  std::string summary;
  ScenarioConfig defaults;
  std::optional<ExampleId> example;
};

const std::vector<ScenarioInfo>& scenario_catalog();
/// ConfigError on an unknown id.
const ScenarioInfo& find_scenario(std::string_view id);

/// Eventual strict increase: N leaves at least min_tail_pairs pairs and every
/// tail increment is at least min_tail_increment.
bool eventually_strictly_increasing(const IncreaseAnalysis& a, std::size_t count, const Tolerances& tol);

/// Eventual non-strict increase: drops below -tol stop at least min_pairs before the end.
bool eventually_nondecreasing(std::span<const double> values, double tol, int min_pairs);

/// Hyperbolic map and every curve with a non-tangential declared slope.
bool theorem_hypotheses_hold(const ScenarioConfig& cfg);

ScenarioReport run_monotonicity(const ScenarioConfig& cfg);
ScenarioReport run_total_speed(const ScenarioConfig& cfg);
/// ConfigError unless both curves share a declared slope.
ScenarioReport run_closeness(const ScenarioConfig& cfg);
ScenarioReport run_slopes(const ScenarioConfig& cfg);
ScenarioReport run_logcos(const ScenarioConfig& cfg);
/// Throws CounterexampleNotReproduced when a sub-check fails.
ScenarioReport run_example(ExampleId id, const ScenarioConfig& cfg);
ScenarioReport run_modulus_growth(const ScenarioConfig& cfg, std::uint64_t seed);
ScenarioReport run_im_growth(const ScenarioConfig& cfg);

/// Dispatches on the scenario kind; never throws on a failed check.
ScenarioReport run_scenario(const ScenarioInfo& info, const ScenarioConfig& cfg, std::uint64_t seed = 0);

}  // namespace hyproj
