#include "hyproj/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace hyproj {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

HalfPlanePoint in_h(Complex z, const char* what) {
  if (!(z.real() > 0.0)) throw ConfigError(std::string(what) + ": must lie in the right half-plane");
  return HalfPlanePoint::from_complex(z);
}

const MapSpec& need_map(const ScenarioConfig& cfg) {
  if (!cfg.map) throw ConfigError("scenario needs a map");
  return *cfg.map;
}

Curve single_curve(const ScenarioConfig& cfg) {
  if (cfg.curves.size() != 1) throw ConfigError("scenario needs exactly one curve");
  return make_curve(cfg.curves.front());
}

Orbit orbit_of(const ScenarioConfig& cfg) {
  return iterate(need_map(cfg), in_h(cfg.z, "z"), static_cast<std::size_t>(std::max(cfg.n_range.last, 1)));
}

/// Projections of orbit points first..last, in order.
std::vector<ProjectionResult> project_range(const Curve& c, const Orbit& o, const ScenarioConfig& cfg) {
  std::vector<ProjectionResult> out;
  for (int n = cfg.n_range.first; n <= cfg.n_range.last; ++n) {
    ProjectionPolicy policy = cfg.policy.at(n);
    if (policy.kind == PolicyKind::Continuity && !out.empty()) policy.point = out.back().chosen.point;
    try {
      out.push_back(project(c, o.points[static_cast<std::size_t>(n)], cfg.tolerances.projection, policy));
    } catch (const InconclusiveProjection& e) {
      throw InconclusiveProjection("index " + std::to_string(n) + ": " + e.what());
    } catch (const DomainError& e) {
      throw ConfigError("index " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

IncreaseAnalysis shifted(IncreaseAnalysis a, int first) {
  a.first_increase += static_cast<std::size_t>(first);
  for (auto& v : a.violations) v.first += static_cast<std::size_t>(first);
  return a;
}

std::string describe(const IncreaseAnalysis& a) {
  return "N = " + std::to_string(a.first_increase) + ", " + std::to_string(a.violations.size()) +
         " violations, min tail increment " + num(a.min_tail_increment);
}

/// Orbit, projections and d_H(w, pi_n) for one curve.
struct Trace {
  Orbit orbit;
  std::vector<ProjectionResult> projections;
  std::vector<double> values;
};

Trace trace_of(const Curve& c, const ScenarioConfig& cfg, ScenarioReport& report) {
  const HalfPlanePoint w = in_h(cfg.w, "w");
  Trace t{orbit_of(cfg), {}, {}};
  t.projections = project_range(c, t.orbit, cfg);
  for (int n = cfg.n_range.first; n <= cfg.n_range.last; ++n) {
    const ProjectionResult& r = t.projections[static_cast<std::size_t>(n - cfg.n_range.first)];
    const double v = dist_h(w, r.chosen.point).value();
    t.values.push_back(v);
    report.rows.push_back({n, t.orbit.points[static_cast<std::size_t>(n)], r.chosen.t, r.chosen.point, v});
  }
  return t;
}

const ProjectionResult* at_index(const Trace& t, const ScenarioConfig& cfg, int n) {
  if (n < cfg.n_range.first || n > cfg.n_range.last) return nullptr;
  return &t.projections[static_cast<std::size_t>(n - cfg.n_range.first)];
}

/// The chosen projection at orbit index n lies within `coincide` of `target`.
Check coincides(const Trace& t, const ScenarioConfig& cfg, int n, const HalfPlanePoint& target, std::string name) {
  const ProjectionResult* r = at_index(t, cfg, n);
  if (r == nullptr) return {std::move(name), false, "index " + std::to_string(n) + " outside n_range"};
  const double gap = dist_h(r->chosen.point, target).value();
  return {std::move(name), gap <= cfg.tolerances.coincide,
          "chosen " + num(r->chosen.point.re()) + (r->chosen.point.im() < 0 ? "" : "+") + num(r->chosen.point.im()) +
              "i, d_H to target " + num(gap)};
}

void record_monotonicity(ScenarioReport& report, std::span<const double> values, const ScenarioConfig& cfg,
                         bool informational) {
  const Tolerances& tol = cfg.tolerances;
  const IncreaseAnalysis raw = analyze_increase(values, tol.flat_tolerance);
  report.increase = shifted(raw, cfg.n_range.first);
  if (values.size() >= 2) report.tail = values.back() - values[values.size() - 2];
  report.eventually_nondecreasing = eventually_nondecreasing(values, tol.coincide, tol.min_tail_pairs);
  report.checks.push_back({"eventually strictly increasing", eventually_strictly_increasing(raw, values.size(), tol),
                           describe(*report.increase), informational});
}

ScenarioReport pairwise(const ScenarioConfig& cfg, std::string id, bool same_slope_required) {
  if (cfg.curves.size() != 2) throw ConfigError(id + ": needs exactly two curves");
  const Curve c1 = make_curve(cfg.curves[0]);
  const Curve c2 = make_curve(cfg.curves[1]);
  const auto& s1 = c1.declared_slope();
  const auto& s2 = c2.declared_slope();
  if (!s1 || !s2 || s1->is_tangential() || s2->is_tangential())
    throw ConfigError(id + ": both curves need a non-tangential declared slope");
  const double target = dist_angles(*s1, *s2).value();
  if (same_slope_required && s1->radians() != s2->radians())
    throw ConfigError(id + ": slope mismatch (" + num(s1->radians()) + " vs " + num(s2->radians()) +
                      "); use the slopes scenario");

  ScenarioReport report;
  report.id = std::move(id);
  report.value_label = "d_H(pi_1, pi_2)";
  const Orbit o = orbit_of(cfg);
  const auto r1 = project_range(c1, o, cfg);
  const auto r2 = project_range(c2, o, cfg);
  bool gated = false, within = true;
  double worst = 0.0;
  for (int n = cfg.n_range.first; n <= cfg.n_range.last; ++n) {
    const std::size_t k = static_cast<std::size_t>(n - cfg.n_range.first);
    const HalfPlanePoint& z = o.points[static_cast<std::size_t>(n)];
    const double gap = dist_h(r1[k].chosen.point, r2[k].chosen.point).value();
    report.rows.push_back({n, z, r1[k].chosen.t, r1[k].chosen.point, gap});
    if (z.modulus() >= cfg.tolerances.gate) {
      gated = true;
      worst = std::max(worst, std::abs(gap - target));
      within = within && std::abs(gap - target) < cfg.tolerances.limit;
    }
  }
  report.tail = report.rows.back().value;
  report.target = target;
  report.checks.push_back({"limit reached past |z_n| >= " + num(cfg.tolerances.gate), gated && within,
                           gated ? "worst |gap - target| " + num(worst) + ", target " + num(target)
                                 : std::string("no index reaches the gate")});
  return report;
}

ScenarioReport example_report(ExampleId id, const ScenarioConfig& cfg) {
  ScenarioReport report;
  report.id = std::string(to_string(id));
  const Curve curve = single_curve(cfg);
  const Tolerances& tol = cfg.tolerances;
  const bool hypotheses = theorem_hypotheses_hold(cfg);

  if (id == ExampleId::Ex31) {
    const MapSpec& m = need_map(cfg);
    if (m.kind() != MapSpec::Kind::Scaling) throw ConfigError("ex31: needs the scaling semigroup");
    const HalfPlanePoint z = in_h(cfg.z, "z");
    const Trace t = trace_of(curve, cfg, report);
    for (int n : {2, 3, 4}) {
      const HalfPlanePoint target = HalfPlanePoint::from_cartesian(std::exp(static_cast<double>(n)), 0.0);
      std::string found = "none";
      for (double eps : {0.1, 0.01, 0.001}) {
        bool all = true;
        for (double s : {n - eps, static_cast<double>(n), n + eps}) {
          const auto r = project(curve, m.flow(z, s), tol.projection, cfg.policy.at(n));
          all = all && dist_h(r.chosen.point, target).value() <= tol.coincide;
        }
        if (all) {
          found = num(eps);
          break;
        }
      }
      report.checks.push_back({"plateau at e^" + std::to_string(n), found != "none", "epsilon " + found});
    }
    // Continuous-time trace on a fixed grid for the non-strict verdict.
    const HalfPlanePoint w = in_h(cfg.w, "w");
    std::vector<double> grid;
    for (double s = cfg.n_range.first; s <= cfg.n_range.last + 1e-12; s += 0.05)
      grid.push_back(dist_h(w, project(curve, m.flow(z, s), tol.projection, ProjectionPolicy::last()).chosen.point)
                         .value());
    report.eventually_nondecreasing = eventually_nondecreasing(grid, tol.coincide, tol.min_tail_pairs);
    const IncreaseAnalysis raw = analyze_increase(t.values, tol.flat_tolerance);
    report.increase = shifted(raw, cfg.n_range.first);
    report.checks.push_back({"integer-time orbit consistent with the theorem",
                             !hypotheses || eventually_strictly_increasing(raw, t.values.size(), tol),
                             describe(*report.increase)});
    return report;
  }

  const Trace t = trace_of(curve, cfg, report);
  const IncreaseAnalysis raw = analyze_increase(t.values, tol.flat_tolerance);
  report.increase = shifted(raw, cfg.n_range.first);
  report.eventually_nondecreasing = eventually_nondecreasing(t.values, tol.coincide, tol.min_tail_pairs);
  if (t.values.size() >= 2) report.tail = t.values.back() - t.values[t.values.size() - 2];

  switch (id) {
    case ExampleId::Ex32Zero: {
      for (int n = 1; n <= 5; ++n) {
        const HalfPlanePoint target = HalfPlanePoint::from_cartesian(3.0 * n, 0.0);
        report.checks.push_back(coincides(t, cfg, 3 * n - 2, target, "pi(f^" + std::to_string(3 * n - 2) + "(1)) = " +
                                                                        std::to_string(3 * n)));
        report.checks.push_back(coincides(t, cfg, 3 * n - 1, target, "pi(f^" + std::to_string(3 * n - 1) + "(1)) = " +
                                                                        std::to_string(3 * n)));
      }
      const auto flat = std::count_if(raw.violations.begin(), raw.violations.end(),
                                      [&](const auto& v) { return v.second <= tol.coincide; });
      report.checks.push_back({"at least 5 non-increasing adjacent pairs", flat >= 5, std::to_string(flat) + " pairs"});
      const double sqrt5 = std::sqrt(5.0);
      const HalfPlanePoint two = HalfPlanePoint::from_cartesian(2.0, 0.0);
      const double via_spine = rho_h(two, HalfPlanePoint::from_cartesian(sqrt5, 1.0));
      const double via_arc = rho_h(two, HalfPlanePoint::from_cartesian(3.0, 0.0));
      const bool closed_forms =
          std::abs(via_spine - 1.0 / (sqrt5 + 2.0)) <= 1e-12 && std::abs(via_arc - 0.2) <= 1e-12;
      report.checks.push_back({"rho(2, sqrt5 + i) = 1/(sqrt5 + 2) > 1/5 = rho(2, 3)",
                               closed_forms && 1.0 / (sqrt5 + 2.0) > 0.2,
                               num(via_spine) + " vs " + num(via_arc)});
      break;
    }
    case ExampleId::Ex32Pos: {
      for (int n = 1; n <= 5; ++n) {
        const double r = std::sqrt(1.0 + (2.0 * n + 1) * (2.0 * n + 1));
        const HalfPlanePoint target = HalfPlanePoint::from_cartesian(r, 0.0);
        const std::string rhs = " = sqrt(1 + " + std::to_string(2 * n + 1) + "^2)";
        report.checks.push_back(coincides(t, cfg, 2 * n + 1, target, "pi(g^" + std::to_string(2 * n + 1) + "(1))" + rhs));
        report.checks.push_back(coincides(t, cfg, 2 * n + 2, target, "pi(g^" + std::to_string(2 * n + 2) + "(1))" + rhs));
        // The pairing the engine finds: g^{2n+2}(1) and g^{2n+3}(1) share sqrt(1 + (2n+3)^2).
        const double next = std::sqrt(1.0 + (2.0 * n + 3) * (2.0 * n + 3));
        Check shift = coincides(t, cfg, 2 * n + 2, HalfPlanePoint::from_cartesian(next, 0.0),
                                "pi(g^" + std::to_string(2 * n + 2) + "(1)) = sqrt(1 + " + std::to_string(2 * n + 3) +
                                    "^2)");
        shift.informational = true;
        report.checks.push_back(std::move(shift));
      }
      const auto flat = std::count_if(raw.violations.begin(), raw.violations.end(),
                                      [&](const auto& v) { return v.second <= tol.coincide; });
      report.checks.push_back({"not eventually strictly increasing", !eventually_strictly_increasing(raw, t.values.size(), tol),
                               std::to_string(flat) + " non-increasing pairs", true});
      break;
    }
    case ExampleId::Ex33: {
      const double three_quarters = 0.75 * std::log(2.0);
      for (int n : {1, 2}) {
        const ProjectionResult* r = at_index(t, cfg, n);
        const double d = r ? t.values[static_cast<std::size_t>(n - cfg.n_range.first)] : NAN;
        report.checks.push_back({"d_H(w, pi_" + std::to_string(n) + ") = 3/4 log 2",
                                 r && std::abs(d - three_quarters) <= 1e-12, "value " + num(d)});
      }
      bool strict = cfg.n_range.last >= 3;
      for (int n = std::max(3, cfg.n_range.first + 1); n <= cfg.n_range.last; ++n) {
        const std::size_t k = static_cast<std::size_t>(n - cfg.n_range.first);
        strict = strict && t.values[k] - t.values[k - 1] > tol.flat_tolerance;
      }
      report.checks.push_back({"strictly increasing for n >= 3", strict, describe(*report.increase)});
      break;
    }
    case ExampleId::Ex34: {
      bool pinned = true;
      for (const ProjectionResult& r : t.projections)
        pinned = pinned && r.chosen.t == 0.0 && r.chosen.point.re() == 1.0 && r.chosen.point.im() == 0.0;
      report.checks.push_back({"t_star = 0 and chosen = 1 at every index", pinned, ""});
      bool refused = false;
      try {
        verify_escape(curve, t.orbit.points, tol.projection);
      } catch (const DomainError&) {
        refused = true;
      }
      report.checks.push_back({"verify_escape refuses a tangential curve", refused, ""});
      break;
    }
    case ExampleId::Ex31: break;
  }
  report.checks.push_back({"counterexample violates a theorem hypothesis or agrees with it",
                           !hypotheses || eventually_strictly_increasing(raw, t.values.size(), tol),
                           hypotheses ? "hypotheses hold; " + describe(*report.increase)
                                      : std::string("map parabolic or slope tangential")});
  return report;
}

ScenarioConfig base(MapSpec m, Complex z, Complex w, NRange range) {
  ScenarioConfig c;
  c.map = std::move(m);
  c.z = z;
  c.w = w;
  c.n_range = range;
  return c;
}

ScenarioConfig with_curves(ScenarioConfig c, std::vector<CurveSpec> curves) {
  c.curves = std::move(curves);
  return c;
}

ScenarioConfig with_limit(ScenarioConfig c, double limit, double gate) {
  c.tolerances.limit = limit;
  c.tolerances.gate = gate;
  return c;
}

std::vector<ScenarioInfo> build_catalog() {
  const double pi = std::numbers::pi;
  const MapSpec twice = MapSpec::affine(2.0, 0.0);
  const MapSpec shift_real = MapSpec::affine(1.0, 1.0);
  const MapSpec shift_imag = MapSpec::affine(1.0, Complex{0.0, 1.0});
  const auto radial = [](double theta, double r0) -> CurveSpec { return RadialRaySpec{theta, r0}; };
  const auto example = [](ExampleId id, int n_max) -> CurveSpec { return ExampleCurveSpec{id, n_max}; };

  std::vector<ScenarioInfo> out;
  out.push_back({"theorem-main", ScenarioKind::Monotonicity, "f = 2z onto the positive real ray, w = 3+i",
                 with_curves(base(twice, {1, 2}, {3, 1}, {0, 40}), {radial(0.0, 1.0)}), {}});
  out.push_back({"total-speed", ScenarioKind::TotalSpeed, "d_H(w, f^n(z)) for f = 2z",
                 base(twice, 1.0, {7, 2}, {0, 40}), {}});
  out.push_back({"total-speed-parabolic", ScenarioKind::TotalSpeed, "d_H(1, f^n(1)) for f = z + 1",
                 base(shift_real, 1.0, 1.0, {0, 100}), {}});
  out.push_back({"total-speed-automorphism", ScenarioKind::TotalSpeed, "d_H(1, g^n(1)) for g = z + i",
                 base(shift_imag, 1.0, 1.0, {0, 100}), {}});
  out.push_back({"closeness", ScenarioKind::Closeness, "rays of slope 0.4 through 0 and offset by 5i",
                 with_limit(with_curves(base(twice, {1, 1}, 1.0, {1, 36}),
                                        {radial(0.4, 1.0), RaySpec{Complex{0.0, 5.0} + std::polar(1.0, 0.4), 0.4}}),
                            1e-3, 1e6),
                 {}});
  out.push_back({"closeness-ex31", ScenarioKind::Closeness, "positive real ray against the ex31 curve, z_n = e^n",
                 with_limit(with_curves(base(MapSpec::scaling(), 1.0, 1.0, {1, 16}),
                                        {radial(0.0, 1.0), example(ExampleId::Ex31, 20)}),
                            1e-3, 1e6),
                 {}});
  out.push_back({"slopes", ScenarioKind::Slopes, "rays of slope 0 and pi/3, z_n = 2^n",
                 with_limit(with_curves(base(twice, 1.0, 1.0, {0, 40}), {radial(0.0, 1.0), radial(pi / 3.0, 1.0)}),
                            1e-4, 1e8),
                 {}});
  out.push_back({"slopes-symmetric", ScenarioKind::Slopes, "rays of slope -0.3 and 0.3, z_n = 2^n (1+i)",
                 with_limit(with_curves(base(twice, {1, 1}, 1.0, {0, 40}), {radial(-0.3, 1.0), radial(0.3, 1.0)}),
                            1e-4, 1e8),
                 {}});
  out.push_back({"logcos", ScenarioKind::LogCos, "theta = pi/3, r0 = 1, r_n = 2^n",
                 with_limit(with_curves(base(twice, 1.0, 1.0, {0, 30}), {radial(pi / 3.0, 1.0)}), 1e-6, 0.0), {}});
  out.push_back({"logcos-zero", ScenarioKind::LogCos, "theta = 0, r0 = 1, r_n = 2^n",
                 with_limit(with_curves(base(twice, 1.0, 1.0, {0, 30}), {radial(0.0, 1.0)}), 1e-12, 0.0), {}});
  out.push_back({"logcos-half", ScenarioKind::LogCos, "theta = 0.5, r0 = 3, r_n = 3 2^n",
                 with_limit(with_curves(base(twice, 3.0, 1.0, {0, 30}), {radial(0.5, 3.0)}), 1e-6, 0.0), {}});

  out.push_back({"ex31", ScenarioKind::Example, "plateaus of the scaling semigroup on a comb curve",
                 with_curves(base(MapSpec::scaling(), 1.0, 1.0, {1, 6}), {example(ExampleId::Ex31, 8)}),
                 ExampleId::Ex31});
  out.push_back({"ex32_zero", ScenarioKind::Example, "f = z + 1: projections repeat in pairs",
                 with_curves(base(shift_real, 1.0, 1.0, {0, 17}), {example(ExampleId::Ex32Zero, 8)}),
                 ExampleId::Ex32Zero});
  out.push_back({"ex32_pos", ScenarioKind::Example, "g = z + i: projections repeat in pairs",
                 with_curves(base(shift_imag, 1.0, 1.0, {0, 14}), {example(ExampleId::Ex32Pos, 10)}),
                 ExampleId::Ex32Pos});
  ScenarioConfig ex33 = with_curves(base(twice, 1.0, 1.0, {0, 20}), {example(ExampleId::Ex33, 1)});
  ex33.policy = {PolicyKind::Explicit, Complex{2.0 * std::sqrt(2.0), 0.0}, {1, 2}, PolicyKind::Last};
  out.push_back({"ex33", ScenarioKind::Example, "f = 2z on two tangent circles: equality before strict increase",
                 ex33, ExampleId::Ex33});
  out.push_back({"ex34", ScenarioKind::Example, "f = 2z onto a vertical ray: projection stuck at 1",
                 with_curves(base(twice, 1.0, 1.0, {1, 20}), {example(ExampleId::Ex34, 1)}), ExampleId::Ex34});

  out.push_back({"modulus-growth", ScenarioKind::ModulusGrowth, "|f^n(z) - w| for f = 2z and 20 random w",
                 base(twice, {1, 1}, 0.0, {0, 200}), {}});
  out.push_back({"modulus-growth-shifted", ScenarioKind::ModulusGrowth, "|f^n(z) - w| for f = 2z + 1 and 20 random w",
                 base(MapSpec::affine(2.0, 1.0), {1, 1}, 0.0, {0, 200}), {}});
  out.push_back({"im-growth", ScenarioKind::ImGrowth, "|Im g^n(1)| for g = z + i",
                 base(shift_imag, 1.0, 1.0, {0, 40}), {}});
  out.push_back({"im-growth-zero-step", ScenarioKind::ImGrowth, "|Im f^n(1)| for f = z + 1 (zero step)",
                 base(shift_real, 1.0, 1.0, {0, 40}), {}});
  return out;
}

}  // namespace

bool ScenarioReport::passed() const { return first_failure() == nullptr; }

const Check* ScenarioReport::first_failure() const {
  for (const Check& c : checks)
    if (!c.pass && !c.informational) return &c;
  return nullptr;
}

const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> catalog = build_catalog();
  return catalog;
}

const ScenarioInfo& find_scenario(std::string_view id) {
  for (const ScenarioInfo& s : scenario_catalog())
    if (s.id == id) return s;
  throw ConfigError("unknown scenario '" + std::string(id) + "'; see 'hyproj list'");
}

bool eventually_strictly_increasing(const IncreaseAnalysis& a, std::size_t count, const Tolerances& tol) {
  if (count < 2) return false;
  const std::size_t pairs_after = count - 1 - std::min(a.first_increase, count - 1);
  return pairs_after >= static_cast<std::size_t>(tol.min_tail_pairs) && a.min_tail_increment >= tol.min_tail_increment;
}

bool eventually_nondecreasing(std::span<const double> values, double tol, int min_pairs) {
  std::size_t last_drop = 0;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] - values[k - 1] < -tol) last_drop = k;
  return values.size() >= 2 && values.size() - 1 - last_drop >= static_cast<std::size_t>(min_pairs);
}

bool theorem_hypotheses_hold(const ScenarioConfig& cfg) {
  if (!cfg.map || cfg.curves.empty()) return false;
  try {
    if (classify(*cfg.map) != MapClass::Hyperbolic) return false;
  } catch (const EstimationError&) {
    return false;
  }
  return std::all_of(cfg.curves.begin(), cfg.curves.end(), [](const CurveSpec& s) {
    const Curve c = make_curve(s);
    return c.declared_slope().has_value() && !c.is_tangential();
  });
}

ScenarioReport run_monotonicity(const ScenarioConfig& cfg) {
  ScenarioReport report;
  report.id = "monotonicity";
  const Curve curve = single_curve(cfg);
  const Trace t = trace_of(curve, cfg, report);
  record_monotonicity(report, t.values, cfg, !theorem_hypotheses_hold(cfg));
  return report;
}

ScenarioReport run_total_speed(const ScenarioConfig& cfg) {
  ScenarioReport report;
  report.id = "total-speed";
  report.value_label = "d_H(w, f^n(z))";
  const HalfPlanePoint w = in_h(cfg.w, "w");
  const Orbit o = orbit_of(cfg);
  std::vector<double> values;
  for (int n = cfg.n_range.first; n <= cfg.n_range.last; ++n) {
    const HalfPlanePoint& z = o.points[static_cast<std::size_t>(n)];
    values.push_back(dist_h(w, z).value());
    report.rows.push_back({n, z, std::nullopt, std::nullopt, values.back()});
  }
  const bool hyperbolic = classify(need_map(cfg)) == MapClass::Hyperbolic;
  record_monotonicity(report, values, cfg, !hyperbolic);
  return report;
}

ScenarioReport run_closeness(const ScenarioConfig& cfg) { return pairwise(cfg, "closeness", true); }

ScenarioReport run_slopes(const ScenarioConfig& cfg) { return pairwise(cfg, "slopes", false); }

ScenarioReport run_logcos(const ScenarioConfig& cfg) {
  if (cfg.curves.size() != 1 || !std::holds_alternative<RadialRaySpec>(cfg.curves.front()))
    throw ConfigError("logcos: needs one radial_ray curve");
  const RadialRaySpec ray = std::get<RadialRaySpec>(cfg.curves.front());
  const Angle theta = Angle::of(ray.theta);
  if (!(ray.r0 > 0.0)) throw ConfigError("logcos: r0 must be positive");
  ScenarioReport report;
  report.id = "logcos";
  report.value_label = "d_H(r0 e^{i theta}, r_n e^{i theta}) - d_H(r0, r_n)";
  const Orbit o = orbit_of(cfg);
  const double log_r0 = std::log(ray.r0);
  for (int n = cfg.n_range.first; n <= cfg.n_range.last; ++n) {
    const HalfPlanePoint& z = o.points[static_cast<std::size_t>(n)];
    const double log_rn = z.log_r();
    const double diff = dist_h_logpolar(log_r0, theta.radians(), log_rn, theta.radians()).value() -
                        dist_h_logpolar(log_r0, 0.0, log_rn, 0.0).value();
    report.rows.push_back({n, z, std::nullopt, HalfPlanePoint::from_polar(log_rn, theta.radians()), diff});
  }
  report.target = -std::log(std::cos(theta.radians()));
  report.tail = report.rows.back().value;
  const double gap = std::abs(*report.tail - *report.target);
  report.checks.push_back({"tail matches -log cos theta", gap < cfg.tolerances.limit,
                           "tail " + num(*report.tail) + ", target " + num(*report.target)});
  return report;
}

ScenarioReport run_example(ExampleId id, const ScenarioConfig& cfg) {
  ScenarioReport report = example_report(id, cfg);
  if (const Check* failed = report.first_failure())
    throw CounterexampleNotReproduced(report.id + ": " + failed->name + " (" + failed->detail + ")");
  return report;
}

ScenarioReport run_modulus_growth(const ScenarioConfig& cfg, std::uint64_t seed) {
  ScenarioReport report;
  report.id = "modulus-growth";
  report.value_label = "|f^n(z) - w|";
  const MapSpec& m = need_map(cfg);
  if (cfg.n_range.first != 0) throw ConfigError("modulus-growth: n_range must start at 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-100.0, 100.0);
  std::size_t worst_n = 0;
  bool all = true;
  for (int k = 0; k < 20; ++k) {
    const Complex w{coord(rng), coord(rng)};
    const ModulusGrowth g = modulus_growth(m, in_h(cfg.z, "z"), w, static_cast<std::size_t>(cfg.n_range.last));
    const IncreaseAnalysis a = analyze_increase(g.values, cfg.tolerances.flat_tolerance);
    all = all && eventually_strictly_increasing(a, g.values.size(), cfg.tolerances);
    worst_n = std::max(worst_n, a.first_increase);
    if (k == 0) {
      const Orbit o = iterate(m, in_h(cfg.z, "z"), static_cast<std::size_t>(cfg.n_range.last));
      for (int n = 0; n <= cfg.n_range.last; ++n)
        report.rows.push_back({n, o.points[static_cast<std::size_t>(n)], std::nullopt, std::nullopt,
                               g.values[static_cast<std::size_t>(n)]});
      report.increase = a;
    }
  }
  report.checks.push_back({"eventually strictly increasing for 20 random w", all,
                           "largest N " + std::to_string(worst_n) + ", seed " + std::to_string(seed)});
  return report;
}

ScenarioReport run_im_growth(const ScenarioConfig& cfg) {
  ScenarioReport report;
  report.id = "im-growth";
  report.value_label = "|Im f^n(z)|";
  if (cfg.n_range.first != 0) throw ConfigError("im-growth: n_range must start at 0");
  const ImGrowth g = im_monotonicity_check(need_map(cfg), in_h(cfg.z, "z"), static_cast<std::size_t>(cfg.n_range.last));
  const Orbit o = iterate(need_map(cfg), in_h(cfg.z, "z"), static_cast<std::size_t>(cfg.n_range.last));
  for (int n = 0; n <= cfg.n_range.last; ++n)
    report.rows.push_back({n, o.points[static_cast<std::size_t>(n)], std::nullopt, std::nullopt,
                           g.abs_im[static_cast<std::size_t>(n)]});
  report.tail = g.b_hat;
  const IncreaseAnalysis a = analyze_increase(g.abs_im, cfg.tolerances.flat_tolerance);
  report.increase = a;
  report.checks.push_back({"|Im| eventually strictly increasing",
                           eventually_strictly_increasing(a, g.abs_im.size(), cfg.tolerances),
                           "b_hat " + num(g.b_hat) + ", first increase " + std::to_string(g.first_increase) +
                               (g.zero_step ? ", zero step" : ""),
                           g.zero_step});
  return report;
}

ScenarioReport run_scenario(const ScenarioInfo& info, const ScenarioConfig& cfg, std::uint64_t seed) {
  ScenarioReport report = [&] {
    switch (info.kind) {
      case ScenarioKind::Monotonicity: return run_monotonicity(cfg);
      case ScenarioKind::TotalSpeed: return run_total_speed(cfg);
      case ScenarioKind::Closeness: return run_closeness(cfg);
      case ScenarioKind::Slopes: return run_slopes(cfg);
      case ScenarioKind::LogCos: return run_logcos(cfg);
      case ScenarioKind::Example:
        if (!info.example) throw ConfigError(info.id + ": example scenario without an example id");
        return example_report(*info.example, cfg);
      case ScenarioKind::ModulusGrowth: return run_modulus_growth(cfg, seed);
      case ScenarioKind::ImGrowth: return run_im_growth(cfg);
    }
    throw ConfigError("unknown scenario kind");
  }();
  report.id = info.id;
  return report;
}

}  // namespace hyproj
