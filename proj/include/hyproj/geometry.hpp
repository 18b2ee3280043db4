#pragma once

// Hyperbolic geometry of the right half-plane H = {Re z > 0} and the unit
// disc. Distances are evaluated from the pseudo-hyperbolic quotient
//
//   rho(z, w) = |z - w| / |z + conj(w)|,      d(z, w) = atanh(rho),
//
// switching to  d = log1p(rho) - log(sqrt(1 - rho^2))  near the boundary,
// where 1 - rho^2 = 4 Re z Re w / |z + conj(w)|^2 is taken in closed form.

#include <compare>
#include <complex>
#include <numbers>

#include "hyproj/errors.hpp"

namespace hyproj {

using Complex = std::complex<double>;

/// Non-negative hyperbolic length.
class HypDistance {
 public:
  constexpr HypDistance() = default;
  explicit HypDistance(double value);

  constexpr double value() const noexcept { return value_; }
  constexpr auto operator<=>(const HypDistance&) const = default;

 private:
  double value_ = 0.0;
};

/// Landing angle of a curve at infinity. Non-tangential angles lie in the
/// open interval (-pi/2, pi/2); the tangential markers are exactly +-pi/2.
class Angle {
 public:
  static Angle of(double radians);
  static Angle tangential(int sign);

  constexpr double radians() const noexcept { return radians_; }
  constexpr bool is_tangential() const noexcept { return tangential_; }

 private:
  constexpr Angle(double r, bool t) : radians_(r), tangential_(t) {}
  double radians_;
  bool tangential_;
};

/// A point of the right half-plane, carried both as (re, im) and as
/// (log|z|, arg z). The log-polar pair is always valid; the Cartesian pair
/// is valid only while |z| is representable (see has_cartesian()).
class HalfPlanePoint {
 public:
  static HalfPlanePoint from_cartesian(double re, double im);
  static HalfPlanePoint from_complex(Complex z) { return from_cartesian(z.real(), z.imag()); }
  static HalfPlanePoint from_polar(double log_r, double theta);

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  double log_r() const noexcept { return log_r_; }
  double theta() const noexcept { return theta_; }
  bool has_cartesian() const noexcept { return cartesian_; }

  Complex value() const;
  /// |z|, possibly +inf for points only representable in log-polar form.
  double modulus() const noexcept;

 private:
  HalfPlanePoint() = default;
  double re_ = 1.0, im_ = 0.0;
  double log_r_ = 0.0, theta_ = 0.0;
  bool cartesian_ = true;
};

class DiscPoint {
 public:
  DiscPoint(double re, double im);
  explicit DiscPoint(Complex z) : DiscPoint(z.real(), z.imag()) {}

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  Complex value() const noexcept { return {re_, im_}; }

 private:
  double re_, im_;
};

HypDistance dist_h(const HalfPlanePoint& a, const HalfPlanePoint& b);
double rho_h(const HalfPlanePoint& a, const HalfPlanePoint& b);
double one_minus_rho_sq(const HalfPlanePoint& a, const HalfPlanePoint& b);
double cosh_dist(const HalfPlanePoint& a, const HalfPlanePoint& b);

/// Distance between r1 e^{i theta1} and r2 e^{i theta2}; only the ratio
/// r2/r1 enters, so log-moduli far beyond the double range are fine.
HypDistance dist_h_logpolar(double log_r1, double theta1, double log_r2, double theta2);

/// d(e^{i a}, e^{i b}); equal to d(r e^{i a}, r e^{i b}) for every r > 0.
HypDistance dist_angles(Angle a, Angle b);

/// The point of the ray {r e^{i theta} : r >= r_min} closest to z.
HalfPlanePoint project_to_ray(const HalfPlanePoint& z, Angle theta, double r_min);

struct Sector {
  Angle lower;
  Angle upper;
  bool bounded;  // false when an edge hit the tangential markers
};

/// Angles phi1 < theta < phi2 with d(e^{i theta}, e^{i phi_k}) = radius.
/// The R-neighbourhood of a ray of slope theta is, far out, the sector
/// between them.
Sector sector_halfwidth(Angle theta, HypDistance radius);

/// Membership in the open pseudo-hyperbolic disc {z : rho(z, center) < r}.
bool in_pseudo_disc(const HalfPlanePoint& z, const HalfPlanePoint& center, double r);
/// Same set, tested through |conj(z) + c|^2 < 4 Re c Re z / (1 - r^2).
bool in_pseudo_disc_quadratic(const HalfPlanePoint& z, const HalfPlanePoint& center, double r);

struct EuclideanCircle {
  double center;  // on the real axis
  double radius;
};

/// The hyperbolic circle of radius R about the real point c, as a Euclidean
/// circle: it crosses the real axis at c e^{-2R} and c e^{2R}.
EuclideanCircle hyperbolic_circle_euclid(double c, HypDistance radius);

HalfPlanePoint cayley_to_halfplane(const DiscPoint& p);
DiscPoint cayley_to_disc(const HalfPlanePoint& q);

HypDistance dist_d(const DiscPoint& a, const DiscPoint& b);

}  // namespace hyproj
