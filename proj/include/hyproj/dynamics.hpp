#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hyproj/geometry.hpp"

namespace hyproj {

struct AffineMap {
  double a;
  Complex b;

  Complex operator()(Complex z) const { return a * z + b; }
};

/// A holomorphic self-map of H with Denjoy-Wolff point at infinity.
///
/// The repertoire is z -> a z + b with a >= 1 and Re b >= 0 (excluding the
/// identity), compositions of those, and the scaling semigroup e^t z, which
/// acts as its time-one map when iterated.
class MapSpec {
 public:
  enum class Kind { Affine, Composition, Scaling };

  static MapSpec affine(double a, Complex b);
  /// Applied first to last: composition({f, g})(z) = g(f(z)).
  static MapSpec composition(std::vector<MapSpec> maps);
  static MapSpec scaling();

  Kind kind() const noexcept { return kind_; }
  const std::vector<MapSpec>& parts() const noexcept { return parts_; }

  Complex operator()(Complex z) const;
  HalfPlanePoint operator()(const HalfPlanePoint& z) const;

  /// phi_t(z) = e^t z; only for Kind::Scaling.
  HalfPlanePoint flow(const HalfPlanePoint& z, double t) const;

  /// Every map in the repertoire is affine; this is the collapsed form.
  AffineMap collapsed() const noexcept { return affine_; }
  /// Automorphisms of H in the repertoire: a z + i s.
  bool is_automorphism() const noexcept { return affine_.b.real() == 0.0; }

 private:
  MapSpec(Kind kind, AffineMap affine, std::vector<MapSpec> parts)
      : kind_(kind), affine_(affine), parts_(std::move(parts)) {}

  Kind kind_;
  AffineMap affine_;
  std::vector<MapSpec> parts_;
};

struct Orbit {
  HalfPlanePoint base;
  std::vector<HalfPlanePoint> points;  // points[0] = base
  std::vector<HypDistance> steps;      // d(points[n], points[n+1])
  std::vector<double> slopes;          // arg points[n]
};

/// points[n] = m^n(z) for n = 0..n_max.
Orbit iterate(const MapSpec& m, const HalfPlanePoint& z, std::size_t n_max);

/// Angular derivative at infinity, lim |m(x)/x| along the positive reals.
double angular_derivative_estimate(const MapSpec& m);

enum class MapClass { Hyperbolic, Parabolic };
MapClass classify(const MapSpec& m);

struct StepSlopeLimits {
  double d_hat;        // mean of the last quartile of steps
  double phi_hat;      // mean of the last quartile of slopes
  double step_spread;  // max - min over the same window
  double slope_spread;
  double tail_spread;  // max of the two spreads
};

StepSlopeLimits step_slope_limits(const Orbit& o);

/// Mean step over the last quartile of a long orbit, without storing it.
double estimate_step(const MapSpec& m, const HalfPlanePoint& z, std::size_t n = std::size_t{1} << 21);

/// Steps below this are read as zero hyperbolic step.
inline constexpr double kZeroStepThreshold = 1e-6;

/// Holomorphic self-maps do not increase hyperbolic distance; automorphisms
/// preserve it.
bool schwarz_pick_check(const MapSpec& m, std::span<const std::pair<HalfPlanePoint, HalfPlanePoint>> pairs);

struct ImGrowth {
  double b_hat;                   // tail mean of (Im f^{n+1} - Im f^n) / Re f^n
  std::size_t first_increase;     // |Im f^n| strictly increasing for n >= this
  bool zero_step;
  std::vector<double> abs_im;
};

ImGrowth im_monotonicity_check(const MapSpec& m, const HalfPlanePoint& z, std::size_t n_max);

struct ModulusGrowth {
  std::vector<double> values;  // |f^n(z) - w|
  std::size_t first_increase;
};

/// |f^n(z) - w| for n = 0..n_max, with the index after which it strictly increases.
ModulusGrowth modulus_growth(const MapSpec& m, const HalfPlanePoint& z, Complex w, std::size_t n_max);

}  // namespace hyproj
