#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyproj/curves.hpp"
#include "hyproj/dynamics.hpp"
#include "hyproj/projection.hpp"

namespace hyproj {

struct NRange {
  int first = 0;
  int last = 20;
};

/// Pass/fail thresholds. Projection options ride along since they are
/// tolerances of the engine.
struct Tolerances {
  double flat_tolerance = 1e-9;     // a step must exceed this to count as an increase
  double min_tail_increment = 1e-6;
  int min_tail_pairs = 3;           // strictly increasing pairs required after N
  double limit = 1e-3;              // distance to the target limit
  double gate = 1e6;                // |z_n| from which the limit is checked
  double coincide = 1e-6;           // d_H below which two projections are the same point
  ProjectionOptions projection;
};

/// Explicit points may apply to selected indices only, with another policy elsewhere.
struct PolicyConfig {
  PolicyKind kind = PolicyKind::Last;
  std::optional<Complex> point;
  std::vector<int> indices;  // empty: every index
  PolicyKind otherwise = PolicyKind::Last;

  ProjectionPolicy at(int n) const;
  bool needs_sequential() const;
};

struct ScenarioConfig {
  std::optional<MapSpec> map;
  std::vector<CurveSpec> curves;
  Complex z{1.0, 0.0};
  Complex w{1.0, 0.0};
  NRange n_range;
  PolicyConfig policy;
  Tolerances tolerances;
};

/// Overlays a JSON document onto `base`. Unknown keys raise ConfigError.
ScenarioConfig parse_config(std::string_view json_text, const ScenarioConfig& base);
ScenarioConfig load_config(const std::filesystem::path& path, const ScenarioConfig& base);
std::string dump_config(const ScenarioConfig& cfg);

std::string map_to_json(const MapSpec& m);
MapSpec map_from_json(std::string_view json_text);
std::string curve_to_json(const CurveSpec& c);
CurveSpec curve_from_json(std::string_view json_text);

/// HYPROJ_SEED, or 0 when unset.
std::uint64_t seed_from_env();

}  // namespace hyproj
