#include "hyproj/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyproj/sequence.hpp"

namespace hyproj {

namespace {

// Above |z| = 1e280 affine steps are taken in rescaled coordinates.
const double kRescaleLog = std::log(1e280);

HalfPlanePoint apply_affine(const AffineMap& f, const HalfPlanePoint& p) {
  if (p.has_cartesian() && p.log_r() < kRescaleLog) {
    const Complex w = f(p.value());
    if (std::isfinite(w.real()) && std::isfinite(w.imag())) return HalfPlanePoint::from_complex(w);
  }
  // a z + b = e^L (a e^{i theta} + b e^{-L}), L = log|z|.
  const double L = p.log_r();
  const Complex v = f.a * std::polar(1.0, p.theta()) + f.b * std::exp(-L);
  if (!(v.real() > 0.0)) throw InvalidPoint("affine image left the half-plane");
  return HalfPlanePoint::from_polar(L + std::log(std::abs(v)), std::arg(v));
}

AffineMap compose(const AffineMap& inner, const AffineMap& outer) {
  return {outer.a * inner.a, outer.a * inner.b + outer.b};
}

double mean(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

double spread(std::span<const double> v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

}  // namespace

MapSpec MapSpec::affine(double a, Complex b) {
  if (!std::isfinite(a) || !std::isfinite(b.real()) || !std::isfinite(b.imag()))
    throw DomainError("affine map: non-finite coefficients");
  if (!(a >= 1.0)) throw DomainError("affine map: need a >= 1");
  if (!(b.real() >= 0.0)) throw DomainError("affine map: need Re b >= 0");
  if (a == 1.0 && b == Complex{}) throw DomainError("affine map: the identity has no Denjoy-Wolff point");
  return MapSpec(Kind::Affine, {a, b}, {});
}

MapSpec MapSpec::composition(std::vector<MapSpec> maps) {
  if (maps.empty()) throw DomainError("composition of no maps");
  AffineMap total{1.0, {}};
  for (const MapSpec& m : maps) total = compose(total, m.collapsed());
  if (total.a == 1.0 && total.b == Complex{}) throw DomainError("composition collapses to the identity");
  return MapSpec(Kind::Composition, total, std::move(maps));
}

MapSpec MapSpec::scaling() { return MapSpec(Kind::Scaling, {std::exp(1.0), {}}, {}); }

Complex MapSpec::operator()(Complex z) const {
  if (kind_ == Kind::Composition) {
    for (const MapSpec& m : parts_) z = m(z);
    return z;
  }
  return affine_(z);
}

HalfPlanePoint MapSpec::operator()(const HalfPlanePoint& z) const {
  switch (kind_) {
    case Kind::Affine: return apply_affine(affine_, z);
    case Kind::Composition: {
      HalfPlanePoint p = z;
      for (const MapSpec& m : parts_) p = m(p);
      return p;
    }
    case Kind::Scaling: return flow(z, 1.0);
  }
  return z;
}

HalfPlanePoint MapSpec::flow(const HalfPlanePoint& z, double t) const {
  if (kind_ != Kind::Scaling) throw DomainError("flow is only defined for the scaling semigroup");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("semigroup time must be non-negative");
  if (z.has_cartesian() && z.log_r() + t < kRescaleLog) return HalfPlanePoint::from_complex(std::exp(t) * z.value());
  return HalfPlanePoint::from_polar(z.log_r() + t, z.theta());
}

Orbit iterate(const MapSpec& m, const HalfPlanePoint& z, std::size_t n_max) {
  if (n_max < 1) throw DomainError("iterate: n_max must be at least 1");
  Orbit o{z, {}, {}, {}};
  o.points.reserve(n_max + 1);
  o.points.push_back(z);
  for (std::size_t n = 0; n < n_max; ++n) {
    try {
      o.points.push_back(m(o.points.back()));
    } catch (const InvalidPoint&) {
      throw OrbitTruncated("orbit left the half-plane after index " + std::to_string(n), n);
    }
  }
  o.steps.reserve(n_max);
  for (std::size_t n = 0; n < n_max; ++n) o.steps.push_back(dist_h(o.points[n], o.points[n + 1]));
  o.slopes.reserve(n_max + 1);
  for (const HalfPlanePoint& p : o.points) o.slopes.push_back(p.theta());
  return o;
}

double angular_derivative_estimate(const MapSpec& m) {
  std::vector<double> ratios;
  for (int k = 10; k <= 40; ++k) {
    const double x = std::ldexp(1.0, k);
    ratios.push_back(std::abs(m(Complex{x, 0.0})) / x);
  }
  const std::span<const double> last(ratios.end() - 10, ratios.end());
  if (spread(last) > 1e-6) throw EstimationError("angular derivative: ratios do not settle");
  // Richardson step for an O(1/x) remainder with x doubling.
  const double extrapolated = 2.0 * ratios.back() - ratios[ratios.size() - 2];
  return std::max(1.0, extrapolated);
}

MapClass classify(const MapSpec& m) {
  return angular_derivative_estimate(m) > 1.0 + 1e-9 ? MapClass::Hyperbolic : MapClass::Parabolic;
}

StepSlopeLimits step_slope_limits(const Orbit& o) {
  if (o.points.size() < 20) throw DomainError("step_slope_limits: orbit shorter than 20 points");
  std::vector<double> steps;
  steps.reserve(o.steps.size());
  for (const HypDistance& s : o.steps) steps.push_back(s.value());
  const std::span<const double> step_tail(steps.begin() + 3 * steps.size() / 4, steps.end());
  const std::span<const double> slope_tail(o.slopes.begin() + 3 * o.slopes.size() / 4, o.slopes.end());
  StepSlopeLimits out{mean(step_tail), mean(slope_tail), spread(step_tail), spread(slope_tail), 0.0};
  out.tail_spread = std::max(out.step_spread, out.slope_spread);
  return out;
}

double estimate_step(const MapSpec& m, const HalfPlanePoint& z, std::size_t n) {
  if (n < 4) throw DomainError("estimate_step: need at least 4 iterations");
  const std::size_t tail_from = 3 * n / 4;
  HalfPlanePoint p = z;
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const HalfPlanePoint next = m(p);
    if (k >= tail_from) sum += dist_h(p, next).value();
    p = next;
  }
  return sum / static_cast<double>(n - tail_from);
}

bool schwarz_pick_check(const MapSpec& m, std::span<const std::pair<HalfPlanePoint, HalfPlanePoint>> pairs) {
  const bool automorphism = m.is_automorphism();
  for (const auto& [z, w] : pairs) {
    const double before = dist_h(z, w).value();
    const double after = dist_h(m(z), m(w)).value();
    if (after > before + 1e-10) return false;
    if (automorphism && std::abs(after - before) > 1e-10) return false;
  }
  return true;
}

ImGrowth im_monotonicity_check(const MapSpec& m, const HalfPlanePoint& z, std::size_t n_max) {
  if (n_max < 4) throw DomainError("im_monotonicity_check: need n_max >= 4");
  const Orbit o = iterate(m, z, n_max);
  ImGrowth out{};
  std::vector<double> im, re;
  for (const HalfPlanePoint& p : o.points) {
    im.push_back(p.im());
    re.push_back(p.re());
    out.abs_im.push_back(std::abs(p.im()));
  }
  std::vector<double> ratios;
  for (std::size_t n = 3 * n_max / 4; n < n_max; ++n) ratios.push_back((im[n + 1] - im[n]) / re[n]);
  out.b_hat = mean(ratios);
  out.first_increase = analyze_increase(out.abs_im).first_increase;
  out.zero_step = estimate_step(m, z) < kZeroStepThreshold;
  return out;
}

ModulusGrowth modulus_growth(const MapSpec& m, const HalfPlanePoint& z, Complex w, std::size_t n_max) {
  const Orbit o = iterate(m, z, n_max);
  ModulusGrowth out{};
  for (const HalfPlanePoint& p : o.points)
    out.values.push_back(p.has_cartesian() ? std::abs(p.value() - w) : p.modulus());
  out.first_increase = analyze_increase(out.values).first_increase;
  return out;
}

}  // namespace hyproj
