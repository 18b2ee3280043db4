#include "hyproj/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hyproj {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// Above this log-modulus the Cartesian formula risks overflow in |z + conj w|.
constexpr double kCartesianLogLimit = 690.0;
// Beyond this pseudo-distance atanh loses digits; use the 1 - rho^2 identity.
constexpr double kBoundaryRho = 0.99;

struct Pseudo {
  double rho;    // |z - w| / |z + conj w|
  double q;      // sqrt(1 - rho^2), may underflow to 0
  double log_q;  // log(sqrt(1 - rho^2)), always finite
};

Pseudo cartesian_parts(const HalfPlanePoint& a, const HalfPlanePoint& b) {
  const double num = std::hypot(a.re() - b.re(), a.im() - b.im());
  const double den = std::hypot(a.re() + b.re(), a.im() - b.im());
  const double rho = std::min(num / den, 1.0);
  const double q = 2.0 * std::sqrt(a.re()) * std::sqrt(b.re()) / den;
  double log_q;
  if (q > 1e-300)
    log_q = std::log(q);
  else
    log_q = std::log(2.0) + 0.5 * std::log(a.re()) + 0.5 * std::log(b.re()) - std::log(den);
  return {rho, q, log_q};
}

Pseudo logpolar_parts(double log_r1, double theta1, double log_r2, double theta2) {
  // rho^2 = (x^2 - 2x cos(t1 - t2) + 1) / (x^2 + 2x cos(t1 + t2) + 1), x = r2/r1,
  // which is invariant under x -> 1/x, so take x = e^{-|gap|} <= 1.
  const double gap = std::abs(log_r2 - log_r1);
  const double x = std::exp(-gap);
  const double one_minus_x = -std::expm1(-gap);
  const double s_diff = std::sin(0.5 * (theta1 - theta2));
  const double c_sum = std::cos(0.5 * (theta1 + theta2));
  const double num = one_minus_x * one_minus_x + 4.0 * x * s_diff * s_diff;
  const double den = one_minus_x * one_minus_x + 4.0 * x * c_sum * c_sum;
  const double rho = std::min(std::sqrt(num / den), 1.0);
  const double c1 = std::cos(theta1);
  const double c2 = std::cos(theta2);
  const double log_q =
      0.5 * (std::log(4.0) - gap + std::log(c1) + std::log(c2) - std::log(den));
  const double q = x > 1e-300 ? std::sqrt(4.0 * x * c1 * c2 / den) : std::exp(log_q);
  return {rho, q, log_q};
}

Pseudo parts(const HalfPlanePoint& a, const HalfPlanePoint& b) {
  if (a.has_cartesian() && b.has_cartesian() && a.log_r() < kCartesianLogLimit &&
      b.log_r() < kCartesianLogLimit)
    return cartesian_parts(a, b);
  return logpolar_parts(a.log_r(), a.theta(), b.log_r(), b.theta());
}

double distance_from(const Pseudo& p) {
  if (p.rho < kBoundaryRho) return std::atanh(p.rho);
  return std::log1p(p.rho) - p.log_q;
}

void require_non_tangential(Angle a, const char* what) {
  if (a.is_tangential()) throw DomainError(std::string(what) + ": tangential angle");
}

}  // namespace

HypDistance::HypDistance(double value) : value_(value) {
  if (!(value >= 0.0) || !std::isfinite(value))
    throw DomainError("hyperbolic distance must be finite and non-negative");
}

Angle Angle::of(double radians) {
  if (!std::isfinite(radians) || !(std::abs(radians) < kHalfPi))
    throw DomainError("angle must lie in (-pi/2, pi/2)");
  return Angle(radians, false);
}

Angle Angle::tangential(int sign) {
  if (sign != 1 && sign != -1) throw DomainError("tangential marker sign must be +1 or -1");
  return Angle(sign * kHalfPi, true);
}

HalfPlanePoint HalfPlanePoint::from_cartesian(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im) || !(re > 0.0))
    throw InvalidPoint("point outside the right half-plane");
  HalfPlanePoint p;
  p.re_ = re;
  p.im_ = im;
  const double big = std::max(re, std::abs(im));
  const double small = std::min(re, std::abs(im)) / big;
  p.log_r_ = std::log(big) + 0.5 * std::log1p(small * small);
  p.theta_ = std::atan2(im, re);
  p.cartesian_ = true;
  return p;
}

HalfPlanePoint HalfPlanePoint::from_polar(double log_r, double theta) {
  if (!std::isfinite(log_r) || !std::isfinite(theta) || !(std::abs(theta) < kHalfPi))
    throw InvalidPoint("log-polar point outside the right half-plane");
  HalfPlanePoint p;
  p.log_r_ = log_r;
  p.theta_ = theta;
  const double r = std::exp(log_r);
  p.re_ = r * std::cos(theta);
  p.im_ = r * std::sin(theta);
  p.cartesian_ = std::isfinite(p.re_) && std::isfinite(p.im_) && p.re_ > 0.0;
  return p;
}

Complex HalfPlanePoint::value() const {
  if (!cartesian_) throw DomainError("point has no finite Cartesian form");
  return {re_, im_};
}

double HalfPlanePoint::modulus() const noexcept {
  if (cartesian_) return std::hypot(re_, im_);
  return std::exp(log_r_);
}

DiscPoint::DiscPoint(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im) || !(std::hypot(re, im) < 1.0))
    throw DomainError("point outside the open unit disc");
}

HypDistance dist_h(const HalfPlanePoint& a, const HalfPlanePoint& b) {
  return HypDistance(distance_from(parts(a, b)));
}

double rho_h(const HalfPlanePoint& a, const HalfPlanePoint& b) { return parts(a, b).rho; }

double one_minus_rho_sq(const HalfPlanePoint& a, const HalfPlanePoint& b) {
  const Pseudo p = parts(a, b);
  if (p.q > 1e-150) return p.q * p.q;
  return std::exp(2.0 * p.log_q);
}

double cosh_dist(const HalfPlanePoint& a, const HalfPlanePoint& b) {
  const Pseudo p = parts(a, b);
  if (p.q > 1e-300) return 1.0 / p.q;
  return std::exp(-p.log_q);
}

HypDistance dist_h_logpolar(double log_r1, double theta1, double log_r2, double theta2) {
  if (!std::isfinite(log_r1) || !std::isfinite(log_r2) || !(std::abs(theta1) < kHalfPi) ||
      !(std::abs(theta2) < kHalfPi))
    throw InvalidPoint("log-polar coordinates outside the right half-plane");
  return HypDistance(distance_from(logpolar_parts(log_r1, theta1, log_r2, theta2)));
}

HypDistance dist_angles(Angle a, Angle b) {
  require_non_tangential(a, "dist_angles");
  require_non_tangential(b, "dist_angles");
  return dist_h_logpolar(0.0, a.radians(), 0.0, b.radians());
}

HalfPlanePoint project_to_ray(const HalfPlanePoint& z, Angle theta, double r_min) {
  require_non_tangential(theta, "project_to_ray");
  if (!(r_min > 0.0) || !std::isfinite(r_min)) throw DomainError("project_to_ray: r_min must be positive");
  return HalfPlanePoint::from_polar(std::max(z.log_r(), std::log(r_min)), theta.radians());
}

Sector sector_halfwidth(Angle theta, HypDistance radius) {
  require_non_tangential(theta, "sector_halfwidth");
  if (!(radius.value() > 0.0)) throw DomainError("sector_halfwidth: radius must be positive");
  const double t = theta.radians();
  const double target = radius.value();
  const auto dist = [t](double phi) { return dist_h_logpolar(0.0, t, 0.0, phi).value(); };

  // phi -> d(e^{i theta}, e^{i phi}) is monotone on either side of theta.
  const auto edge = [&](double limit, Angle& out) {
    if (dist(limit) < target) {
      out = Angle::tangential(limit > 0 ? 1 : -1);
      return false;
    }
    double near = t, far = limit;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (near + far);
      if (mid == near || mid == far) break;
      (dist(mid) < target ? near : far) = mid;
    }
    const double best = std::abs(dist(near) - target) < std::abs(dist(far) - target) ? near : far;
    out = Angle::of(best);
    return true;
  };

  const double limit = std::nextafter(kHalfPi, 0.0);
  Angle lower = theta, upper = theta;
  const bool lo_ok = edge(-limit, lower);
  const bool hi_ok = edge(limit, upper);
  return {lower, upper, lo_ok && hi_ok};
}

bool in_pseudo_disc(const HalfPlanePoint& z, const HalfPlanePoint& center, double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("pseudo-hyperbolic radius must lie in (0, 1)");
  return rho_h(z, center) < r;
}

bool in_pseudo_disc_quadratic(const HalfPlanePoint& z, const HalfPlanePoint& center, double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("pseudo-hyperbolic radius must lie in (0, 1)");
  // Both sides are homogeneous of degree two; rescale to keep the squares finite.
  const double scale = std::max(z.modulus(), center.modulus());
  const Complex zs = z.value() / scale;
  const Complex cs = center.value() / scale;
  return std::norm(std::conj(zs) + cs) < 4.0 * cs.real() * zs.real() / (1.0 - r * r);
}

EuclideanCircle hyperbolic_circle_euclid(double c, HypDistance radius) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("hyperbolic circle centre must be a positive real");
  return {c * std::cosh(2.0 * radius.value()), c * std::sinh(2.0 * radius.value())};
}

HalfPlanePoint cayley_to_halfplane(const DiscPoint& p) {
  const double m = std::hypot(p.re(), p.im());
  const double den = (1.0 - p.re()) * (1.0 - p.re()) + p.im() * p.im();
  return HalfPlanePoint::from_cartesian((1.0 - m) * (1.0 + m) / den, 2.0 * p.im() / den);
}

DiscPoint cayley_to_disc(const HalfPlanePoint& q) {
  const Complex z = q.value();
  const double m = std::abs(z);
  const double den = std::norm(z + 1.0);
  return DiscPoint((m - 1.0) * (m + 1.0) / den, 2.0 * z.imag() / den);
}

HypDistance dist_d(const DiscPoint& a, const DiscPoint& b) {
  return dist_h(cayley_to_halfplane(a), cayley_to_halfplane(b));
}

}  // namespace hyproj
