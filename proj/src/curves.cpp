#include "hyproj/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hyproj {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kJoinTolerance = 1e-12;

struct SegmentGeometry {
  double length;
  Complex start;
  Complex finish;  // unused for rays
};

SegmentGeometry describe(const Segment& s) {
  return std::visit(
      [](const auto& seg) -> SegmentGeometry {
        using T = std::decay_t<decltype(seg)>;
        if constexpr (std::is_same_v<T, LineSegment>) {
          return {std::abs(seg.to - seg.from), seg.from, seg.to};
        } else if constexpr (std::is_same_v<T, CircularArc>) {
          const Complex c{seg.center, 0.0};
          return {seg.radius * std::abs(seg.angle_to - seg.angle_from), c + std::polar(seg.radius, seg.angle_from),
                  c + std::polar(seg.radius, seg.angle_to)};
        } else {
          return {kInf, seg.origin, seg.origin};
        }
      },
      s);
}

// Exact on the axes, where std::polar leaves a cos(pi/2) residue.
Complex unit_direction(double phi) {
  if (phi == std::numbers::pi / 2.0) return {0.0, 1.0};
  if (phi == -std::numbers::pi / 2.0) return {0.0, -1.0};
  return std::polar(1.0, phi);
}

// Position and unit tangent at arclength s from the segment start.
std::pair<Complex, Complex> walk(const Segment& s, double arclength) {
  return std::visit(
      [arclength](const auto& seg) -> std::pair<Complex, Complex> {
        using T = std::decay_t<decltype(seg)>;
        if constexpr (std::is_same_v<T, LineSegment>) {
          const Complex d = seg.to - seg.from;
          const double len = std::abs(d);
          if (len == 0.0) return {seg.from, {1.0, 0.0}};
          const Complex u = d / len;
          if (arclength >= len) return {seg.to, u};
          return {seg.from + arclength * u, u};
        } else if constexpr (std::is_same_v<T, CircularArc>) {
          const double dir = seg.angle_to >= seg.angle_from ? 1.0 : -1.0;
          const double sweep = std::abs(seg.angle_to - seg.angle_from);
          const double phi = arclength >= seg.radius * sweep ? seg.angle_to
                                                             : seg.angle_from + dir * arclength / seg.radius;
          const Complex unit = std::polar(1.0, phi);
          return {Complex{seg.center, 0.0} + seg.radius * unit, dir * Complex{0.0, 1.0} * unit};
        } else {
          const Complex u = unit_direction(seg.direction);
          return {seg.origin + arclength * u, u};
        }
      },
      s);
}

bool close(Complex a, Complex b) {
  return std::abs(a - b) <= kJoinTolerance * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

void PiecewiseCurve::push(const Segment& segment, bool reversed) {
  if (unbounded()) throw CurveError("no segment may follow an infinite ray");
  const SegmentGeometry g = describe(segment);
  if (!(g.length >= 0.0)) throw CurveError("segment with invalid length");
  if (reversed && std::isinf(g.length)) throw CurveError("an infinite ray cannot be walked backwards");
  const Complex start = reversed ? g.finish : g.start;
  if (!pieces_.empty() && !close(end_point(), start))
    throw CurveError("consecutive segments do not join");
  pieces_.push_back({segment, reversed, finite_length_, g.length});
  if (std::isfinite(g.length)) finite_length_ += g.length;
}

PiecewiseCurve& PiecewiseCurve::then(const Segment& segment) {
  push(segment, false);
  return *this;
}

PiecewiseCurve& PiecewiseCurve::detour(const Segment& segment) {
  push(segment, false);
  push(segment, true);
  return *this;
}

bool PiecewiseCurve::unbounded() const noexcept {
  return !pieces_.empty() && std::isinf(pieces_.back().length);
}

Complex PiecewiseCurve::end_point() const {
  if (pieces_.empty()) throw CurveError("empty curve");
  const Piece& p = pieces_.back();
  if (std::isinf(p.length)) throw CurveError("unbounded curve has no end point");
  const SegmentGeometry g = describe(p.segment);
  return p.reversed ? g.start : g.finish;
}

const PiecewiseCurve::Piece& PiecewiseCurve::locate(double t) const {
  if (pieces_.empty()) throw CurveError("empty curve");
  // Last piece whose t_begin <= t.
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                             [](double value, const Piece& p) { return value < p.t_begin; });
  if (it == pieces_.begin()) return pieces_.front();
  --it;
  // A zero-length piece shares t_begin with its successor; prefer the later one.
  return *it;
}

Complex PiecewiseCurve::eval(double t) const {
  if (!(t >= 0.0)) throw CurveError("curve parameter must be non-negative");
  const Piece& p = locate(t);
  double s = std::min(t - p.t_begin, p.length);
  if (p.reversed) s = p.length - s;
  return walk(p.segment, s).first;
}

Complex PiecewiseCurve::tangent(double t) const {
  if (!(t >= 0.0)) throw CurveError("curve parameter must be non-negative");
  const Piece& p = locate(t);
  double s = std::min(t - p.t_begin, p.length);
  if (p.reversed) s = p.length - s;
  const Complex u = walk(p.segment, s).second;
  return p.reversed ? -u : u;
}

std::string_view to_string(ExampleId id) {
  switch (id) {
    case ExampleId::Ex31: return "ex31";
    case ExampleId::Ex32Zero: return "ex32_zero";
    case ExampleId::Ex32Pos: return "ex32_pos";
    case ExampleId::Ex33: return "ex33";
    case ExampleId::Ex34: return "ex34";
  }
  return "?";
}

ExampleId parse_example_id(std::string_view text) {
  for (ExampleId id : {ExampleId::Ex31, ExampleId::Ex32Zero, ExampleId::Ex32Pos, ExampleId::Ex33, ExampleId::Ex34})
    if (to_string(id) == text) return id;
  throw ConfigError("unknown example curve id '" + std::string(text) + "'");
}

Curve::Curve(CurveSpec spec, PiecewiseCurve path, std::optional<Angle> declared_slope, AnalyticProjection analytic,
             std::optional<double> detail_end)
    : spec_(std::move(spec)),
      path_(std::move(path)),
      slope_(declared_slope),
      analytic_(std::move(analytic)),
      detail_end_(detail_end) {
  if (path_.pieces().empty()) throw CurveError("curve without segments");
}

HalfPlanePoint Curve::eval(double t) const {
  const Complex z = path_.eval(t);
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(z.real() > 0.0))
    throw CurveError("curve left the half-plane at t = " + std::to_string(t));
  return HalfPlanePoint::from_complex(z);
}

std::optional<HalfPlanePoint> Curve::analytic_projection(const HalfPlanePoint& z) const {
  if (!analytic_) return std::nullopt;
  return analytic_(z);
}

Curve radial_ray(Angle theta, double r0) {
  if (theta.is_tangential()) throw DomainError("radial_ray: tangential angle");
  if (!(r0 > 0.0) || !std::isfinite(r0)) throw DomainError("radial_ray: r0 must be positive");
  PiecewiseCurve path;
  path.then(Ray{std::polar(r0, theta.radians()), theta.radians()});
  return Curve(RadialRaySpec{theta.radians(), r0}, std::move(path), theta,
               [theta, r0](const HalfPlanePoint& z) { return project_to_ray(z, theta, r0); });
}

Curve shifted_ray(Complex origin, Angle theta) {
  if (theta.is_tangential()) throw DomainError("shifted_ray: tangential angle");
  if (!(origin.real() > 0.0)) throw InvalidPoint("shifted_ray: origin outside the half-plane");
  PiecewiseCurve path;
  path.then(Ray{origin, theta.radians()});
  return Curve(RaySpec{origin, theta.radians()}, std::move(path), theta);
}

Curve horizontal_ray(const HalfPlanePoint& w) {
  const Complex base = w.value();
  PiecewiseCurve path;
  path.then(Ray{base, 0.0});
  // The geodesic through z orthogonal to the line Im = Im w is the circle
  // about i Im w through z; it meets the line at Re = |z - i Im w|.
  auto analytic = [base](const HalfPlanePoint& z) {
    const double reach = std::abs(z.value() - Complex{0.0, base.imag()});
    return HalfPlanePoint::from_cartesian(std::max(reach, base.real()), base.imag());
  };
  return Curve(HorizontalRaySpec{base}, std::move(path), Angle::of(0.0), analytic);
}

Curve vertical_ray(double x0, int sign) {
  if (!(x0 > 0.0) || !std::isfinite(x0)) throw DomainError("vertical_ray: x0 must be positive");
  if (sign != 1 && sign != -1) throw DomainError("vertical_ray: sign must be +1 or -1");
  PiecewiseCurve path;
  path.then(Ray{{x0, 0.0}, sign * std::numbers::pi / 2.0});
  return Curve(VerticalRaySpec{x0, sign}, std::move(path), Angle::tangential(sign));
}

CircularArc geodesic_arc(double radius, double angle_from, double angle_to) {
  if (!(radius > 0.0)) throw DomainError("geodesic_arc: radius must be positive");
  Angle::of(angle_from);
  Angle::of(angle_to);
  return {0.0, radius, angle_from, angle_to};
}

namespace {

// Horizontal spine at height `level` starting from Re = x_start, with the
// arc of |z| = radius(n) hanging off it for n = 1..n_max. Each arc runs from
// its junction with the spine to the real axis (or, for level < 0, from the
// real axis side: the arc is always walked junction -> far end -> junction).
template <typename RadiusFn>
std::pair<PiecewiseCurve, double> comb(double level, double x_start, int n_max, RadiusFn radius) {
  PiecewiseCurve path;
  Complex cursor{x_start, level};
  for (int n = 1; n <= n_max; ++n) {
    const double r = radius(n);
    const double x = std::sqrt((r - level) * (r + level));
    const Complex junction{x, level};
    if (junction != cursor) path.then(LineSegment{cursor, junction});
    path.detour(geodesic_arc(r, std::atan2(level, x), 0.0));
    cursor = junction;
  }
  const double detail_end = path.finite_length();
  path.then(Ray{cursor, 0.0});
  return {std::move(path), detail_end};
}

}  // namespace

Curve example_curve(ExampleId id, int n_max) {
  if (n_max < 1) throw DomainError("example_curve: n_max must be at least 1");
  const ExampleCurveSpec spec{id, n_max};
  switch (id) {
    case ExampleId::Ex31: {
      // Spine {t + i}, arcs joining e^n with sqrt(e^{2n} - 1) + i. The spine
      // starts slightly inside H since t = 0 would sit on the boundary.
      auto [path, end] = comb(1.0, 0.1, n_max, [](int n) { return std::exp(static_cast<double>(n)); });
      return Curve(spec, std::move(path), Angle::of(0.0), {}, end);
    }
    case ExampleId::Ex32Zero: {
      // Spine {t + i : t >= 1}, arcs joining 3n with sqrt(9n^2 - 1) + i.
      auto [path, end] = comb(1.0, 1.0, n_max, [](int n) { return 3.0 * n; });
      return Curve(spec, std::move(path), Angle::of(0.0), {}, end);
    }
    case ExampleId::Ex32Pos: {
      // Spine {t - i : t >= 3}, arcs joining sqrt(1 + (2n+1)^2) with (2n+1) - i.
      auto [path, end] = comb(-1.0, 3.0, n_max, [](int n) {
        const double k = 2.0 * n + 1.0;
        return std::sqrt(1.0 + k * k);
      });
      return Curve(spec, std::move(path), Angle::of(0.0), {}, end);
    }
    case ExampleId::Ex33: {
      // Hyperbolic circles of radius log 2^{1/4} about 2 and 4, which touch
      // at 2 sqrt 2, followed by the real ray from 4 sqrt 2.
      const HypDistance radius(0.25 * std::log(2.0));
      const EuclideanCircle small = hyperbolic_circle_euclid(2.0, radius);
      const EuclideanCircle large = hyperbolic_circle_euclid(4.0, radius);
      const double pi = std::numbers::pi;
      PiecewiseCurve path;
      path.then(CircularArc{small.center, small.radius, 0.0, 2.0 * pi})
          .then(CircularArc{large.center, large.radius, -pi, pi})
          .then(CircularArc{large.center, large.radius, pi, 0.0})
          .then(Ray{{large.center + large.radius, 0.0}, 0.0});
      return Curve(spec, std::move(path), Angle::of(0.0));
    }
    case ExampleId::Ex34: {
      Curve c = vertical_ray(1.0, 1);
      return Curve(spec, c.path(), c.declared_slope());
    }
  }
  throw ConfigError("unknown example curve");
}

Curve make_curve(const CurveSpec& spec) {
  return std::visit(
      [](const auto& s) -> Curve {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RadialRaySpec>) return radial_ray(Angle::of(s.theta), s.r0);
        else if constexpr (std::is_same_v<T, RaySpec>) return shifted_ray(s.origin, Angle::of(s.theta));
        else if constexpr (std::is_same_v<T, HorizontalRaySpec>) return horizontal_ray(HalfPlanePoint::from_complex(s.w));
        else if constexpr (std::is_same_v<T, VerticalRaySpec>) return vertical_ray(s.x0, s.sign);
        else return example_curve(s.id, s.n_max);
      },
      spec);
}

SlopeInterval slope_cluster(const Curve& c, double t_lo, double t_hi, int samples) {
  if (!(t_lo < t_hi) || samples < 2) throw DomainError("slope_cluster: need t_lo < t_hi and samples >= 2");
  SlopeInterval out{kInf, -kInf};
  for (int k = 0; k < samples; ++k) {
    const double t = t_lo + (t_hi - t_lo) * k / (samples - 1);
    const double arg = std::arg(c.eval_complex(t));
    out.min = std::min(out.min, arg);
    out.max = std::max(out.max, arg);
  }
  return out;
}

}  // namespace hyproj
