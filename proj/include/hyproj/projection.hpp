#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyproj/curves.hpp"
#include "hyproj/dynamics.hpp"
#include "hyproj/geometry.hpp"

namespace hyproj {

struct ProjectionOptions {
  int coarse_samples = 1024;    // on the closing ray, geometric in 1 + s
  int samples_per_piece = 48;   // on every finite piece
  double t_tol = 1e-12;         // relative parameter tolerance of the refinement
  double d_cluster = 1e-7;      // distances this close to the minimum are ties
  double domain_margin = 0.05;  // fraction of the domain that must lie past every minimizer

  void validate() const;
};

enum class PolicyKind { First, Last, All, Continuity, Explicit };

/// Which of several equidistant projections to report.
struct ProjectionPolicy {
  PolicyKind kind = PolicyKind::Last;
  /// Explicit: the requested point. Continuity: the previous choice.
  std::optional<HalfPlanePoint> point;

  static ProjectionPolicy first() { return {PolicyKind::First, {}}; }
  static ProjectionPolicy last() { return {PolicyKind::Last, {}}; }
  static ProjectionPolicy all() { return {PolicyKind::All, {}}; }
  static ProjectionPolicy continuity(std::optional<HalfPlanePoint> previous = {}) {
    return {PolicyKind::Continuity, previous};
  }
  static ProjectionPolicy explicit_point(const HalfPlanePoint& p) { return {PolicyKind::Explicit, p}; }
};

struct Minimizer {
  double t;
  HalfPlanePoint point;
  double distance;
};

struct ProjectionResult {
  std::vector<Minimizer> minimizers;  // ordered by t, one entry per distinct point
  HypDistance global_distance;
  int tie_count = 0;
  Minimizer chosen;
  bool continuum = false;  // a run of coarse samples all tie
  double domain_end = 0.0;
};

/// Global minimizers of t -> d(z, c(t)).
ProjectionResult project(const Curve& c, const HalfPlanePoint& z, const ProjectionOptions& opts = {},
                         const ProjectionPolicy& policy = {});

std::vector<ProjectionResult> project_orbit(const Curve& c, std::span<const HalfPlanePoint> points,
                                            const ProjectionOptions& opts = {}, const ProjectionPolicy& policy = {});
std::vector<ProjectionResult> project_orbit(const Curve& c, const Orbit& orbit, const ProjectionOptions& opts = {},
                                            const ProjectionPolicy& policy = {});

/// Empirical check that projections of an escaping sequence escape too:
/// the smallest |projection| over the last quarter of `zs` exceeds `bound`.
/// Refuses curves without a non-tangential declared slope.
bool verify_escape(const Curve& c, std::span<const HalfPlanePoint> zs, const ProjectionOptions& opts = {},
                   double bound = 1e3);

}  // namespace hyproj
