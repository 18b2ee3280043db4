#include "hyproj/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hyproj {

namespace {

constexpr double kGoldenInv = 0.6180339887498949;  // (sqrt 5 - 1) / 2
constexpr int kMaxDomainDoublings = 2000;
constexpr int kMaxGuardExtensions = 8;
constexpr int kContinuumRun = 10;
constexpr double kSamePoint = 1e-9;

struct Sampled {
  double t;
  double d;
  bool stationary = false;  // located by a derivative sign change or the t = 0 boundary rule
};

class Engine {
 public:
  Engine(const Curve& c, const HalfPlanePoint& z, const ProjectionOptions& opts)
      : curve_(c), z_(z), zc_(z.value()), opts_(opts) {}

  double distance(double t) const { return dist_h(z_, curve_.eval(t)).value(); }

  // Sign of d/dt d(z, c(t)): Re(c' conj((c - z)(c + conj z))), right-sided at junctions.
  double slope_sign(double t) const {
    const Complex p = curve_.eval_complex(t);
    const Complex product = (p - zc_) * (p + std::conj(zc_));
    const Complex tangent = curve_.tangent(t);
    return tangent.real() * product.real() + tangent.imag() * product.imag();
  }

  ProjectionResult run(const ProjectionPolicy& policy) const;

 private:
  std::vector<double> sample_parameters(double ray_extent) const;
  double choose_ray_extent(double scale) const;
  Sampled refine(double lo, double hi) const;
  Sampled polish(double lo, double hi, Sampled golden) const;
  ProjectionResult assemble(double ray_extent) const;

  const Curve& curve_;
  const HalfPlanePoint& z_;
  Complex zc_;
  const ProjectionOptions& opts_;
};

void append_piece_samples(std::vector<double>& ts, double t_begin, double length, int count) {
  // Geometric in 1 + s: dense where hyperbolic distances change fastest.
  const double span = std::log1p(length);
  for (int k = 0; k <= count; ++k) {
    const double s = k == count ? length : std::expm1(span * k / count);
    ts.push_back(t_begin + std::min(s, length));
  }
}

std::vector<double> Engine::sample_parameters(double ray_extent) const {
  std::vector<double> ts;
  for (const auto& piece : curve_.path().pieces()) {
    if (std::isinf(piece.length))
      append_piece_samples(ts, piece.t_begin, ray_extent, opts_.coarse_samples);
    else
      append_piece_samples(ts, piece.t_begin, piece.length, opts_.samples_per_piece);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

// Extent of the closing ray beyond which nothing can beat the points already
// seen: |c(T)| >= 16 max(|z|, 1) and d(z, c(T)) > (best probe) + 2.
double Engine::choose_ray_extent(double scale) const {
  const auto& pieces = curve_.path().pieces();
  const double ray_begin = pieces.back().t_begin;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& piece : pieces) best = std::min(best, distance(piece.t_begin));
  double extent = 1.0;
  for (int k = 0; k < kMaxDomainDoublings; ++k) {
    const double t = ray_begin + extent;
    const double d = distance(t);
    if (std::abs(curve_.eval_complex(t)) >= scale && d > best + 2.0) return extent;
    best = std::min(best, d);
    extent *= 2.0;
  }
  throw InconclusiveProjection("could not bound the projection domain");
}

Sampled Engine::refine(double lo, double hi) const {
  double a = lo, b = hi;
  double c = b - kGoldenInv * (b - a);
  double d = a + kGoldenInv * (b - a);
  double fc = distance(c), fd = distance(d);
  for (int it = 0; it < 400 && (b - a) > opts_.t_tol * (1.0 + std::abs(a)); ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kGoldenInv * (b - a);
      fc = distance(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kGoldenInv * (b - a);
      fd = distance(d);
    }
  }
  Sampled best = fc <= fd ? Sampled{c, fc} : Sampled{d, fd};
  for (double edge : {lo, hi}) {
    const double fe = distance(edge);
    if (fe < best.d) best = {edge, fe};
  }
  return polish(lo, hi, best);
}

// Golden section only pins a smooth minimum to ~sqrt(eps); the derivative
// sign crosses zero transversally, so bisecting on it reaches full precision.
Sampled Engine::polish(double lo, double hi, Sampled golden) const {
  const double width = 1e-6 * (1.0 + std::abs(golden.t));
  double left = std::max(lo, golden.t - width);
  double right = std::min(hi, golden.t + width);
  // Widen while the slope points past the window, up to the bracket.
  for (double w = width; left > lo && slope_sign(left) > 0.0;) left = std::max(lo, golden.t - (w *= 2.0));
  for (double w = width; right < hi && slope_sign(right) < 0.0;) right = std::min(hi, golden.t + (w *= 2.0));
  double candidate;
  if (left == 0.0 && slope_sign(0.0) >= 0.0) {
    candidate = 0.0;
  } else if (slope_sign(left) < 0.0 && slope_sign(right) > 0.0) {
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (left + right);
      if (mid == left || mid == right) break;
      (slope_sign(mid) > 0.0 ? right : left) = mid;
    }
    candidate = right;
  } else {
    return golden;
  }
  const double fd = distance(candidate);
  if (fd <= golden.d + 1e-14 * std::max(1.0, golden.d)) return {candidate, fd, true};
  return golden;
}

ProjectionResult Engine::assemble(double ray_extent) const {
  const std::vector<double> ts = sample_parameters(ray_extent);
  std::vector<double> ds(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) ds[k] = distance(ts[k]);

  std::vector<Sampled> refined;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const bool left_ok = k == 0 || ds[k] <= ds[k - 1];
    const bool right_ok = k + 1 == ts.size() || ds[k] <= ds[k + 1];
    if (!left_ok || !right_ok) continue;
    const double lo = k == 0 ? ts[k] : ts[k - 1];
    const double hi = k + 1 == ts.size() ? ts[k] : ts[k + 1];
    refined.push_back(lo < hi ? refine(lo, hi) : Sampled{ts[k], ds[k]});
  }

  double global = *std::min_element(ds.begin(), ds.end());
  for (const Sampled& s : refined) global = std::min(global, s.d);
  const double cutoff = global + opts_.d_cluster;

  std::vector<Sampled> ties;
  for (const Sampled& s : refined)
    if (s.d <= cutoff) ties.push_back(s);
  std::sort(ties.begin(), ties.end(), [](const Sampled& x, const Sampled& y) { return x.t < y.t; });

  bool continuum = false;
  for (std::size_t k = 0, run = 0; k < ts.size(); ++k) {
    run = ds[k] <= cutoff ? run + 1 : 0;
    continuum = continuum || run >= kContinuumRun;
  }

  // Ties with no rise above d_cluster between them belong to one plateau;
  // each plateau contributes one minimizer, preferring a stationary point.
  const auto rise_between = [&](const Sampled& a, const Sampled& b) {
    double peak = -std::numeric_limits<double>::infinity();
    const auto first = std::upper_bound(ts.begin(), ts.end(), a.t);
    for (auto it = first; it != ts.end() && *it < b.t; ++it) peak = std::max(peak, ds[it - ts.begin()]);
    return peak - std::max(a.d, b.d);
  };
  const auto better = [](const Sampled& x, const Sampled& y) {
    if (x.stationary != y.stationary) return x.stationary;
    return x.d < y.d;
  };
  std::vector<Sampled> plateaus;
  for (std::size_t k = 0; k < ties.size(); ++k) {
    if (k > 0 && rise_between(ties[k - 1], ties[k]) <= opts_.d_cluster) {
      if (better(ties[k], plateaus.back())) plateaus.back() = ties[k];
    } else {
      plateaus.push_back(ties[k]);
    }
  }

  ProjectionResult out{{}, HypDistance(global), 0, {0.0, z_, 0.0}, continuum, 0.0};
  for (const Sampled& s : plateaus) {
    const HalfPlanePoint p = curve_.eval(s.t);
    const bool duplicate = std::any_of(out.minimizers.begin(), out.minimizers.end(), [&](const Minimizer& m) {
      return dist_h(m.point, p).value() <= kSamePoint;
    });
    if (!duplicate) out.minimizers.push_back({s.t, p, s.d});
  }
  out.tie_count = static_cast<int>(out.minimizers.size());
  out.domain_end = curve_.path().unbounded() ? curve_.path().pieces().back().t_begin + ray_extent
                                             : curve_.path().finite_length();
  return out;
}

ProjectionResult Engine::run(const ProjectionPolicy& policy) const {
  const bool unbounded = curve_.path().unbounded();
  double extent = unbounded ? choose_ray_extent(16.0 * std::max(std::abs(zc_), 1.0)) : 0.0;

  ProjectionResult result = assemble(extent);
  const auto past_margin = [&](const ProjectionResult& r) {
    return r.minimizers.back().t > (1.0 - opts_.domain_margin) * r.domain_end;
  };
  for (int k = 0; unbounded && past_margin(result) && k < kMaxGuardExtensions; ++k) {
    extent *= 2.0;
    result = assemble(extent);
  }
  if (past_margin(result) && result.domain_end > 0.0)
    throw InconclusiveProjection("projection lies within the last " +
                                 std::to_string(opts_.domain_margin * 100.0) + "% of the parameter domain");
  if (const auto end = curve_.detail_end(); end && result.minimizers.back().t > (1.0 - opts_.domain_margin) * *end)
    throw InconclusiveProjection("projection lies beyond the truncated part of the curve; raise n_max");

  const auto& ms = result.minimizers;
  switch (policy.kind) {
    case PolicyKind::First:
    case PolicyKind::All: result.chosen = ms.front(); break;
    case PolicyKind::Last: result.chosen = ms.back(); break;
    case PolicyKind::Continuity: {
      if (!policy.point) {
        result.chosen = ms.back();
        break;
      }
      const auto closest = std::min_element(ms.begin(), ms.end(), [&](const Minimizer& x, const Minimizer& y) {
        return dist_h(x.point, *policy.point) < dist_h(y.point, *policy.point);
      });
      result.chosen = *closest;
      break;
    }
    case PolicyKind::Explicit: {
      if (!policy.point) throw DomainError("explicit projection policy without a point");
      const HalfPlanePoint& p = *policy.point;
      const double dp = dist_h(z_, p).value();
      if (std::abs(dp - result.global_distance.value()) > opts_.d_cluster)
        throw DomainError("explicit point is not equidistant with the projection");
      const ProjectionResult on_curve = Engine(curve_, p, opts_).run(ProjectionPolicy::first());
      if (on_curve.global_distance.value() > kSamePoint) throw DomainError("explicit point is not on the curve");
      result.chosen = {on_curve.chosen.t, p, dp};
      const bool listed = std::any_of(ms.begin(), ms.end(), [&](const Minimizer& m) {
        return dist_h(m.point, p).value() <= kSamePoint;
      });
      if (!listed) {
        auto& list = result.minimizers;
        list.insert(std::upper_bound(list.begin(), list.end(), result.chosen.t,
                                     [](double t, const Minimizer& m) { return t < m.t; }),
                    result.chosen);
        result.tie_count = static_cast<int>(list.size());
      }
      break;
    }
  }
  return result;
}

}  // namespace

void ProjectionOptions::validate() const {
  if (coarse_samples < 2 || samples_per_piece < 2 || !(t_tol > 0.0) || !(d_cluster > 0.0) ||
      !(domain_margin > 0.0 && domain_margin < 1.0))
    throw ConfigError("projection options must be positive (domain_margin in (0, 1))");
}

ProjectionResult project(const Curve& c, const HalfPlanePoint& z, const ProjectionOptions& opts,
                         const ProjectionPolicy& policy) {
  opts.validate();
  if (!z.has_cartesian()) throw DomainError("project: point beyond the Cartesian range");
  return Engine(c, z, opts).run(policy);
}

std::vector<ProjectionResult> project_orbit(const Curve& c, std::span<const HalfPlanePoint> points,
                                            const ProjectionOptions& opts, const ProjectionPolicy& policy) {
  if (points.empty()) throw DomainError("project_orbit: empty orbit");
  std::vector<ProjectionResult> out;
  out.reserve(points.size());
  for (std::size_t n = 0; n < points.size(); ++n) {
    ProjectionPolicy step = policy;
    if (policy.kind == PolicyKind::Continuity && !out.empty()) step.point = out.back().chosen.point;
    const std::string where = "orbit index " + std::to_string(n) + ": ";
    try {
      out.push_back(project(c, points[n], opts, step));
    } catch (const InconclusiveProjection& e) {
      throw InconclusiveProjection(where + e.what());
    } catch (const CurveError& e) {
      throw CurveError(where + e.what());
    } catch (const DomainError& e) {
      throw DomainError(where + e.what());
    }
  }
  return out;
}

std::vector<ProjectionResult> project_orbit(const Curve& c, const Orbit& orbit, const ProjectionOptions& opts,
                                            const ProjectionPolicy& policy) {
  return project_orbit(c, std::span<const HalfPlanePoint>(orbit.points), opts, policy);
}

bool verify_escape(const Curve& c, std::span<const HalfPlanePoint> zs, const ProjectionOptions& opts, double bound) {
  if (!c.declared_slope() || c.is_tangential())
    throw DomainError("verify_escape: needs a curve with a non-tangential declared slope");
  if (zs.empty()) throw DomainError("verify_escape: empty sequence");
  const auto results = project_orbit(c, zs, opts, ProjectionPolicy::last());
  double tail_min = std::numeric_limits<double>::infinity();
  for (std::size_t n = 3 * results.size() / 4; n < results.size(); ++n)
    tail_min = std::min(tail_min, results[n].chosen.point.modulus());
  return tail_min > bound;
}

}  // namespace hyproj
