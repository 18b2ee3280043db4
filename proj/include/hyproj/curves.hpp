#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyproj/geometry.hpp"

namespace hyproj {

// Segment kinds. Every segment is parametrized by Euclidean arclength.

struct LineSegment {
  Complex from;
  Complex to;
};

/// Arc of the Euclidean circle |z - center| = radius, centre on the real
/// axis, swept from angle_from to angle_to (either orientation). With
/// center = 0 this is a hyperbolic geodesic; otherwise a hyperbolic circle.
struct CircularArc {
  double center;
  double radius;
  double angle_from;
  double angle_to;
};

/// Infinite ray origin + s e^{i direction}, s >= 0.
struct Ray {
  Complex origin;
  double direction;
};

using Segment = std::variant<LineSegment, CircularArc, Ray>;

/// A continuous walk over a union of segments. Hanging pieces are visited
/// out-and-back, so the walk stays continuous while the trace is a union.
class PiecewiseCurve {
 public:
  struct Piece {
    Segment segment;
    bool reversed;
    double t_begin;
    double length;  // +inf for the closing ray
  };

  /// Walk `segment` forwards from the current endpoint.
  PiecewiseCurve& then(const Segment& segment);
  /// Walk `segment` forwards and straight back again.
  PiecewiseCurve& detour(const Segment& segment);

  Complex eval(double t) const;
  /// Unit tangent of the walk at t (right-sided at junctions).
  Complex tangent(double t) const;

  std::span<const Piece> pieces() const noexcept { return pieces_; }
  /// Total length of the finite pieces.
  double finite_length() const noexcept { return finite_length_; }
  bool unbounded() const noexcept;
  Complex end_point() const;

 private:
  void push(const Segment& segment, bool reversed);
  const Piece& locate(double t) const;

  std::vector<Piece> pieces_;
  double finite_length_ = 0.0;
};

enum class ExampleId { Ex31, Ex32Zero, Ex32Pos, Ex33, Ex34 };

std::string_view to_string(ExampleId id);
ExampleId parse_example_id(std::string_view text);

/// Serializable description of a built-in curve.
struct RadialRaySpec {
  double theta;
  double r0;
};
struct RaySpec {
  Complex origin;
  double theta;
};
struct HorizontalRaySpec {
  Complex w;
};
struct VerticalRaySpec {
  double x0;
  int sign;
};
struct ExampleCurveSpec {
  ExampleId id;
  int n_max;
};
using CurveSpec = std::variant<RadialRaySpec, RaySpec, HorizontalRaySpec, VerticalRaySpec, ExampleCurveSpec>;

using AnalyticProjection = std::function<HalfPlanePoint(const HalfPlanePoint&)>;

/// A curve in H landing at infinity.
class Curve {
 public:
  Curve(CurveSpec spec, PiecewiseCurve path, std::optional<Angle> declared_slope,
        AnalyticProjection analytic = {}, std::optional<double> detail_end = {});

  HalfPlanePoint eval(double t) const;
  Complex eval_complex(double t) const { return path_.eval(t); }
  Complex tangent(double t) const { return path_.tangent(t); }

  const PiecewiseCurve& path() const noexcept { return path_; }
  const CurveSpec& spec() const noexcept { return spec_; }
  const std::optional<Angle>& declared_slope() const noexcept { return slope_; }
  bool is_tangential() const noexcept { return slope_ && slope_->is_tangential(); }

  bool has_analytic_projection() const noexcept { return static_cast<bool>(analytic_); }
  std::optional<HalfPlanePoint> analytic_projection(const HalfPlanePoint& z) const;

  /// End of the detailed part of a truncated infinite family; a projection
  /// landing near it may depend on the truncation.
  std::optional<double> detail_end() const noexcept { return detail_end_; }

 private:
  CurveSpec spec_;
  PiecewiseCurve path_;
  std::optional<Angle> slope_;
  AnalyticProjection analytic_;
  std::optional<double> detail_end_;
};

/// t -> (r0 + t) e^{i theta}.
Curve radial_ray(Angle theta, double r0);
/// t -> origin + t e^{i theta}; a ray not through 0 but of the same slope.
Curve shifted_ray(Complex origin, Angle theta);
/// t -> w + t, the geodesic from w to infinity.
Curve horizontal_ray(const HalfPlanePoint& w);
/// t -> x0 + sign i t. Tangential slope.
Curve vertical_ray(double x0, int sign);

/// Geodesic arc of |z| = radius between two angles.
CircularArc geodesic_arc(double radius, double angle_from, double angle_to);

/// Truncation of one of the explicit counterexample traces to its first
/// n_max hanging arcs.
Curve example_curve(ExampleId id, int n_max);

Curve make_curve(const CurveSpec& spec);

struct SlopeInterval {
  double min;
  double max;
};

/// Range of arg(eval(t)) over an even grid in [t_lo, t_hi].
SlopeInterval slope_cluster(const Curve& c, double t_lo, double t_hi, int samples);

}  // namespace hyproj
