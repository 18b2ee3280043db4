#include "hyproj/acceptance.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "hyproj/report.hpp"
#include "hyproj/scenarios.hpp"

namespace hyproj {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

ScenarioReport run_default(const char* id, std::uint64_t seed = 0) {
  const ScenarioInfo& info = find_scenario(id);
  return run_scenario(info, info.defaults, seed);
}

const Row* row_at(const ScenarioReport& r, int n) {
  for (const Row& row : r.rows)
    if (row.n == n) return &row;
  return nullptr;
}

HalfPlanePoint random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> log_mod(std::log(1e-3), std::log(1e6));
  std::uniform_real_distribution<double> angle(-0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
  double theta = angle(rng);
  while (std::cos(theta) <= 0.0) theta = angle(rng);
  return HalfPlanePoint::from_complex(std::polar(std::exp(log_mod(rng)), theta));
}

bool rel_close(double got, double want, double tol) { return std::abs(got - want) <= tol * std::abs(want); }

CriterionResult metric_identities(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int bad_atanh = 0, bad_cosh = 0, bad_one_minus = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 10000; ++k) {
    const HalfPlanePoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
    // 50-digit reference: rho from the coordinates, 1 - rho^2 = 4 Re a Re b / |a + conj b|^2.
    const Wide x1 = a.re(), y1 = a.im(), x2 = b.re(), y2 = b.im();
    const Wide dy2 = (y1 - y2) * (y1 - y2);
    const Wide den = (x1 + x2) * (x1 + x2) + dy2;
    const Wide rho = sqrt(((x1 - x2) * (x1 - x2) + dy2) / den);
    const Wide one_minus = 4 * x1 * x2 / den;
    const Wide atanh_rho = log1p(rho) - log(one_minus) / 2;

    const double d = dist_h(a, b).value();
    if (!rel_close(d, static_cast<double>(atanh_rho), 1e-12)) ++bad_atanh;
    if (!rel_close(one_minus_rho_sq(a, b), static_cast<double>(one_minus), 1e-12)) ++bad_one_minus;
    if (!rel_close(cosh_dist(a, b), std::cosh(d), 1e-12)) ++bad_cosh;
    worst_slack = std::min(worst_slack, d + dist_h(b, c).value() - dist_h(a, c).value());
  }
  const bool pass = bad_atanh == 0 && bad_cosh == 0 && bad_one_minus == 0 && worst_slack >= -1e-12;
  return {1, "metric identities over 10^4 random pairs", pass,
          "mismatches atanh " + std::to_string(bad_atanh) + ", cosh " + std::to_string(bad_cosh) + ", 1-rho^2 " +
              std::to_string(bad_one_minus) + "; worst triangle slack " + num(worst_slack)};
}

CriterionResult main_theorem() {
  const ScenarioReport r = run_default("theorem-main");
  const Complex w{3.0, 1.0};
  // Projection of z onto [1, inf) is |z| once |z| >= 1; d_H to a real r in closed form.
  double oracle_gap = 0.0;
  for (const Row& row : r.rows) {
    const double radius = row.z.modulus();
    const double near = std::abs(w - radius), far = std::abs(w + radius);
    oracle_gap = std::max(oracle_gap, std::abs(row.value - 0.5 * std::log((far + near) / (far - near))));
  }
  const std::size_t n_first = r.increase->first_increase;
  const double tail = *r.tail;
  const bool pass = n_first <= 3 && std::abs(tail - 0.5 * std::log(2.0)) <= 1e-6 && oracle_gap <= 1e-9 &&
                    r.rows.back().n == 40 && r.passed();
  return {2, "main theorem, f = 2z onto the positive real ray", pass,
          "N = " + std::to_string(n_first) + ", increment at n = 40 " + num(tail) + ", closed-form gap " +
              num(oracle_gap)};
}

CriterionResult closeness() {
  const ScenarioReport r = run_default("closeness");
  bool below_tight = true, below_loose = true, monotone = true, reached = false;
  double previous = std::numeric_limits<double>::infinity();
  for (const Row& row : r.rows) {
    const double size = row.z.modulus();
    if (size >= 1e6) {
      reached = true;
      below_tight = below_tight && row.value < 1e-3;
    }
    if (size >= 1e4) {
      below_loose = below_loose && row.value < 1e-2;
      monotone = monotone && row.value <= previous;
      previous = row.value;
    }
  }
  return {3, "closeness of equal-slope rays", reached && below_tight && below_loose && monotone,
          "tail gap " + num(r.rows.back().value) + (monotone ? ", non-increasing" : ", not monotone") +
              " past |z_n| >= 1e4"};
}

CriterionResult different_slopes() {
  const ScenarioReport r = run_default("slopes");
  const double target = std::atanh(1.0 / std::sqrt(3.0));
  double worst = 0.0;
  bool reached = false;
  for (const Row& row : r.rows)
    if (row.z.modulus() >= 1e8) {
      reached = true;
      worst = std::max(worst, std::abs(row.value - target));
    }
  return {4, "different slopes approach d_H(1, e^{i pi/3})", reached && worst < 1e-4,
          "worst tail error " + num(worst)};
}

CriterionResult logcos() {
  const ScenarioReport r = run_default("logcos");
  const ScenarioReport flat = run_default("logcos-zero");
  const Row* at30 = row_at(r, 30);
  const double err = at30 ? std::abs(at30->value - std::log(2.0)) : INFINITY;
  double flat_worst = 0.0;
  for (const Row& row : flat.rows) flat_worst = std::max(flat_worst, std::abs(row.value));
  return {5, "-log cos theta difference", err <= 1e-6 && flat_worst <= 1e-12,
          "error at n = 30 " + num(err) + ", theta = 0 worst " + num(flat_worst)};
}

bool pi_equals(const ScenarioReport& r, int n, double target, double tol) {
  const Row* row = row_at(r, n);
  return row && row->pi && dist_h(*row->pi, HalfPlanePoint::from_cartesian(target, 0.0)).value() <= tol;
}

CriterionResult zero_step_example() {
  const ScenarioReport r = run_default("ex32_zero");
  bool pairs = true;
  for (int n = 1; n <= 5; ++n)
    pairs = pairs && pi_equals(r, 3 * n - 2, 3.0 * n, 1e-6) && pi_equals(r, 3 * n - 1, 3.0 * n, 1e-6);
  int flat = 0;
  for (std::size_t k = 1; k < r.rows.size(); ++k) flat += r.rows[k].value - r.rows[k - 1].value <= 0.0;
  const double sqrt5 = std::sqrt(5.0);
  const double spine = rho_h(HalfPlanePoint::from_cartesian(2.0, 0.0), HalfPlanePoint::from_cartesian(sqrt5, 1.0));
  const bool inequality = std::abs(spine - 1.0 / (sqrt5 + 2.0)) <= 1e-12 && 1.0 / (sqrt5 + 2.0) > 1.0 / 5.0;
  return {6, "zero-step parabolic counterexample", pairs && flat >= 5 && inequality,
          std::string(pairs ? "pairs share 3n" : "pairs differ") + ", " + std::to_string(flat) +
              " non-increasing pairs, rho(2, sqrt5 + i) = " + num(spine)};
}

CriterionResult positive_step_example() {
  const ScenarioReport r = run_default("ex32_pos");
  std::string detail;
  bool pass = true;
  for (int n = 1; n <= 5; ++n) {
    const double target = std::sqrt(1.0 + (2.0 * n + 1) * (2.0 * n + 1));
    for (int k : {2 * n + 1, 2 * n + 2}) {
      if (pi_equals(r, k, target, 1e-6)) continue;
      pass = false;
      const Row* row = row_at(r, k);
      if (detail.empty() && row && row->pi)
        detail = "pi(g^" + std::to_string(k) + "(1)) = " + num(row->pi->re()) + ", expected " + num(target);
    }
  }
  return {7, "positive-step parabolic counterexample", pass, pass ? "pairs share sqrt(1 + (2n+1)^2)" : detail};
}

CriterionResult tangent_circles_example() {
  const ScenarioReport r = run_default("ex33");
  const double target = 0.75 * std::log(2.0);
  bool equal = true;
  for (int n : {1, 2}) {
    const Row* row = row_at(r, n);
    equal = equal && row && std::abs(row->value - target) <= 1e-12 && pi_equals(r, n, 2.0 * std::sqrt(2.0), 1e-12);
  }
  bool strict = true;
  for (int n = 3; n <= 20; ++n) {
    const Row *a = row_at(r, n - 1), *b = row_at(r, n);
    strict = strict && a && b && b->value > a->value;
  }
  return {8, "equality before strict increase on tangent circles", equal && strict,
          std::string(equal ? "d_H = 3/4 log 2 at n = 1, 2" : "n = 1, 2 values off") +
              (strict ? ", strict for 3 <= n <= 20" : ", not strict for n >= 3")};
}

CriterionResult tangential_example() {
  const ScenarioReport r = run_default("ex34");
  bool pinned = true;
  for (int n = 1; n <= 20; ++n) {
    const Row* row = row_at(r, n);
    pinned = pinned && row && row->t_star == 0.0 && row->pi && row->pi->re() == 1.0 && row->pi->im() == 0.0;
  }
  bool refused = false;
  try {
    const Curve vertical = example_curve(ExampleId::Ex34, 1);
    std::vector<HalfPlanePoint> zs;
    for (const Row& row : r.rows) zs.push_back(row.z);
    verify_escape(vertical, zs);
  } catch (const DomainError&) {
    refused = true;
  }
  return {9, "tangential curve pins the projection at 1", pinned && refused,
          std::string(pinned ? "t_star = 0, chosen = 1" : "projection moved") +
              (refused ? ", verify_escape refuses" : ", verify_escape accepted")};
}

CriterionResult semigroup_plateau() {
  const ScenarioInfo& info = find_scenario("ex31");
  const ScenarioConfig& cfg = info.defaults;
  const Curve curve = make_curve(cfg.curves.front());
  const HalfPlanePoint one = HalfPlanePoint::from_cartesian(1.0, 0.0);
  std::string detail;
  bool pass = true;
  for (int n : {2, 3, 4}) {
    const HalfPlanePoint target = HalfPlanePoint::from_cartesian(std::exp(double(n)), 0.0);
    double found = 0.0;
    for (double eps : {0.1, 0.01, 0.001}) {
      bool all = true;
      for (double s : {n - eps, double(n), n + eps})
        all = all && dist_h(project(curve, cfg.map->flow(one, s)).chosen.point, target).value() <= 1e-6;
      if (all) {
        found = eps;
        break;
      }
    }
    pass = pass && found > 0.0;
    detail += (detail.empty() ? "" : ", ") + std::string("n = ") + std::to_string(n) + ": eps " + num(found);
  }
  return {10, "semigroup plateau on the comb curve", pass, detail};
}

CriterionResult modulus_growth_criterion(std::uint64_t seed) {
  const ScenarioReport a = run_default("modulus-growth", seed);
  const ScenarioReport b = run_default("modulus-growth-shifted", seed);
  return {11, "|f^n(z) - w| eventually strictly increasing", a.passed() && b.passed(),
          "f = 2z: " + a.checks.front().detail + "; f = 2z + 1: " + b.checks.front().detail};
}

CriterionResult imaginary_growth() {
  const ImGrowth g = im_monotonicity_check(MapSpec::affine(1.0, Complex{0.0, 1.0}),
                                           HalfPlanePoint::from_cartesian(1.0, 0.0), 40);
  const ScenarioReport speed = run_default("total-speed-parabolic");
  double worst = 0.0;
  bool increasing = true;
  for (std::size_t k = 1; k < speed.rows.size(); ++k) {
    const double step = speed.rows[k].value - speed.rows[k - 1].value;
    const int n = speed.rows[k - 1].n;
    increasing = increasing && step > 0.0;
    worst = std::max(worst, std::abs(step - 0.5 * std::log((n + 2.0) / (n + 1.0))));
  }
  const bool pass = g.b_hat == 1.0 && g.first_increase == 0 && !g.zero_step && increasing && worst <= 1e-12;
  return {12, "parabolic positive step: |Im| growth and total speed", pass,
          "b_hat " + num(g.b_hat) + ", first increase " + std::to_string(g.first_increase) +
              ", worst increment error " + num(worst)};
}

CriterionResult engine_oracle(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> theta(-1.4, 1.4), coord(0.05, 50.0), height(-50.0, 50.0), r0(0.1, 10.0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Curve c = k % 2 == 0 ? radial_ray(Angle::of(theta(rng)), r0(rng))
                               : horizontal_ray(HalfPlanePoint::from_cartesian(coord(rng), height(rng)));
    const HalfPlanePoint z = HalfPlanePoint::from_cartesian(coord(rng), height(rng));
    const double gap = dist_h(project(c, z).chosen.point, *c.analytic_projection(z)).value();
    worst = std::max(worst, gap);
  }
  bool identical = true;
  for (const ScenarioInfo& info : scenario_catalog())
    identical = identical && csv_text(run_scenario(info, info.defaults, seed)) ==
                                 csv_text(run_scenario(info, info.defaults, seed));
  return {13, "projection engine against closed forms; deterministic CSV", worst <= 1e-9 && identical,
          "worst d_H gap " + num(worst) + (identical ? ", CSV byte-identical" : ", CSV differs between runs")};
}

CriterionResult guarded(int number, const char* name, const std::function<CriterionResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {number, name, false, std::string("error: ") + e.what()};
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  return {
      guarded(1, "metric identities", [&] { return metric_identities(seed); }),
      guarded(2, "main theorem", main_theorem),
      guarded(3, "closeness", closeness),
      guarded(4, "different slopes", different_slopes),
      guarded(5, "-log cos", logcos),
      guarded(6, "zero-step counterexample", zero_step_example),
      guarded(7, "positive-step counterexample", positive_step_example),
      guarded(8, "tangent circles", tangent_circles_example),
      guarded(9, "tangential curve", tangential_example),
      guarded(10, "semigroup plateau", semigroup_plateau),
      guarded(11, "modulus growth", [&] { return modulus_growth_criterion(seed); }),
      guarded(12, "imaginary growth", imaginary_growth),
      guarded(13, "engine oracle", [&] { return engine_oracle(seed); }),
  };
}

std::string format_criterion(const CriterionResult& r) {
  char head[16];
  std::snprintf(head, sizeof head, "%2d", r.number);
  return std::string(r.pass ? "PASS" : "FAIL") + " " + head + " " + r.name + ": " + r.detail;
}

}  // namespace hyproj
