#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hyproj/config.hpp"
#include "hyproj/report.hpp"
#include "hyproj/scenarios.hpp"

using namespace hyproj;
using doctest::Approx;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> cells_of(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cell);
      cell.clear();
    } else {
      cell += c;
    }
  }
  out.push_back(cell);
  return out;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "hyproj_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("harness") {
  TEST_CASE("config overlays onto defaults") {
    const ScenarioConfig base = find_scenario("theorem-main").defaults;
    const ScenarioConfig c = parse_config(R"({"z": [2, 3], "n_range": [1, 5], "tolerances": {"d_cluster": 1e-8}})", base);
    CHECK(c.z == Complex{2, 3});
    CHECK(c.w == base.w);
    CHECK(c.n_range.first == 1);
    CHECK(c.n_range.last == 5);
    CHECK(c.tolerances.projection.d_cluster == 1e-8);
    CHECK(c.tolerances.flat_tolerance == base.tolerances.flat_tolerance);
    const ScenarioConfig real = parse_config(R"({"w": 4})", base);
    CHECK(real.w == Complex{4, 0});
  }

  TEST_CASE("config errors") {
    const ScenarioConfig base = find_scenario("theorem-main").defaults;
    CHECK_THROWS_AS(parse_config(R"({"zz": 1})", base), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"tolerances": {"bogus": 1}})", base), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"map": {"type": "affine", "a": 0.5}})", base), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"map": {"type": "moebius"}})", base), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"curve": {"type": "radial_ray", "theta": 2.0}})", base), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"curve": {"type": "example", "id": "ex99"}})", base), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"z": [-1, 0]})", base), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"n_range": [5, 2]})", base), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"policy": {"kind": "explicit"}})", base), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"tolerances": {"domain_margin": 2}})", base), ConfigError);
    CHECK_THROWS_AS(parse_config("{not json", base), ConfigError);
    CHECK_THROWS_AS(find_scenario("no-such-scenario"), ConfigError);
  }

  TEST_CASE("config files name themselves in errors") {
    const auto path = scratch("bad.json");
    std::ofstream(path) << R"({"unknown": true})";
    try {
      load_config(path, {});
      FAIL("expected a config error");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find(path.string()) != std::string::npos);
    }
    CHECK_THROWS_AS(load_config(scratch("missing.json"), {}), ConfigError);
  }

  TEST_CASE("every default config survives a dump and reparse") {
    for (const ScenarioInfo& info : scenario_catalog()) {
      CAPTURE(info.id);
      const std::string once = dump_config(info.defaults);
      const std::string twice = dump_config(parse_config(once, ScenarioConfig{}));
      CHECK(once == twice);
    }
  }

  TEST_CASE("map and curve JSON round trips") {
    const MapSpec m = MapSpec::composition({MapSpec::affine(2.0, {1.0, -1.0}), MapSpec::scaling()});
    CHECK(map_to_json(map_from_json(map_to_json(m))) == map_to_json(m));
    const std::vector<CurveSpec> specs{RadialRaySpec{0.3, 2.0}, RaySpec{{1.0, 2.0}, -0.4}, HorizontalRaySpec{{1.0, 1.0}},
                                       VerticalRaySpec{2.0, -1}, ExampleCurveSpec{ExampleId::Ex32Pos, 7}};
    for (const CurveSpec& s : specs) CHECK(curve_to_json(curve_from_json(curve_to_json(s))) == curve_to_json(s));
  }

  TEST_CASE("per-index policies") {
    PolicyConfig p{PolicyKind::Explicit, Complex{2.0, 0.0}, {1, 2}, PolicyKind::First};
    CHECK(p.at(1).kind == PolicyKind::Explicit);
    CHECK(p.at(1).point->re() == 2.0);
    CHECK(p.at(3).kind == PolicyKind::First);
    CHECK_FALSE(p.needs_sequential());
    CHECK(PolicyConfig{PolicyKind::Continuity, {}, {}, PolicyKind::Last}.needs_sequential());
  }

  TEST_CASE("eventual increase criteria") {
    Tolerances tol;
    const std::vector<double> rising{5.0, 4.0, 4.0, 6.0, 7.0, 8.0, 9.0};
    const IncreaseAnalysis a = analyze_increase(rising, tol.flat_tolerance);
    CHECK(a.first_increase == 2);
    CHECK(eventually_strictly_increasing(a, rising.size(), tol));
    const std::vector<double> late{1.0, 2.0, 3.0, 4.0, 3.0, 5.0};
    CHECK_FALSE(eventually_strictly_increasing(analyze_increase(late, tol.flat_tolerance), late.size(), tol));
    const std::vector<double> crawling{1.0, 1.0 + 1e-8, 1.0 + 2e-8, 1.0 + 3e-8, 1.0 + 4e-8};
    CHECK_FALSE(eventually_strictly_increasing(analyze_increase(crawling, tol.flat_tolerance), crawling.size(), tol));
    const std::vector<double> pairs{1.0, 1.0, 2.0, 2.0, 3.0, 3.0, 4.0, 4.0};
    CHECK_FALSE(eventually_strictly_increasing(analyze_increase(pairs, tol.flat_tolerance), pairs.size(), tol));
    CHECK(eventually_nondecreasing(pairs, 1e-12, 3));
    const std::vector<double> falling{4.0, 3.0, 2.0, 1.0};
    CHECK_FALSE(eventually_nondecreasing(falling, 1e-12, 2));
  }

  TEST_CASE("theorem hypotheses") {
    CHECK(theorem_hypotheses_hold(find_scenario("theorem-main").defaults));
    CHECK_FALSE(theorem_hypotheses_hold(find_scenario("ex34").defaults));
    CHECK_FALSE(theorem_hypotheses_hold(find_scenario("ex32_zero").defaults));
  }

  TEST_CASE("CSV layout") {
    const ScenarioReport r = run_scenario(find_scenario("theorem-main"), find_scenario("theorem-main").defaults);
    const std::string text = csv_text(r);
    CHECK(text.find('\r') == std::string::npos);
    const auto lines = lines_of(text);
    REQUIRE(lines.size() == r.rows.size() + 1);
    CHECK(lines[0] == "n,re_z,im_z,t_star,re_pi,im_pi,dist_w_pi,delta");
    const auto first = cells_of(lines[1]);
    REQUIRE(first.size() == 8);
    CHECK(first[0] == "0");
    CHECK(first[7].empty());
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const auto cells = cells_of(lines[k]);
      REQUIRE(cells.size() == 8);
      const Row& row = r.rows[k - 1];
      CHECK(std::stod(cells[6]) == row.value);
      CHECK(std::stod(cells[4]) == row.pi->re());
      if (k > 1) CHECK(std::stod(cells[7]) == row.value - r.rows[k - 2].value);
    }
  }

  TEST_CASE("rows without a projection leave the projection cells empty") {
    const ScenarioReport r = run_scenario(find_scenario("total-speed"), find_scenario("total-speed").defaults);
    const auto cells = cells_of(lines_of(csv_text(r))[1]);
    CHECK(cells[3].empty());
    CHECK(cells[4].empty());
    CHECK(cells[5].empty());
  }

  TEST_CASE("reports are deterministic") {
    for (const ScenarioInfo& info : scenario_catalog()) {
      CAPTURE(info.id);
      CHECK(csv_text(run_scenario(info, info.defaults, 7)) == csv_text(run_scenario(info, info.defaults, 7)));
    }
  }

  TEST_CASE("emitters write files and name failing paths") {
    const ScenarioReport r = run_scenario(find_scenario("logcos"), find_scenario("logcos").defaults);
    const auto csv = scratch("logcos.csv");
    const auto svg = scratch("logcos.svg");
    emit_csv(r, csv);
    emit_plot(r, svg);
    std::ifstream in(csv, std::ios::binary);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str() == csv_text(r));
    CHECK(plot_svg(r).rfind("<svg", 0) == 0);
    const auto bad = scratch("no_such_dir") / "x" / "y.csv";
    try {
      emit_csv(r, bad);
      FAIL("expected a write error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
    }
  }

  TEST_CASE("scenario verdicts") {
    for (const char* id : {"theorem-main", "total-speed", "total-speed-parabolic", "total-speed-automorphism", "closeness",
                           "closeness-ex31", "slopes", "slopes-symmetric", "logcos", "logcos-zero", "logcos-half", "ex31",
                           "ex32_zero", "ex33", "ex34", "modulus-growth", "modulus-growth-shifted", "im-growth",
                           "im-growth-zero-step"}) {
      CAPTURE(id);
      const ScenarioReport r = run_scenario(find_scenario(id), find_scenario(id).defaults);
      const Check* f = r.first_failure();
      CHECK_MESSAGE(r.passed(), (f ? f->name + ": " + f->detail : std::string()));
    }
  }

  TEST_CASE("the main scenario increases after a short prefix") {
    const ScenarioReport r = run_scenario(find_scenario("theorem-main"), find_scenario("theorem-main").defaults);
    REQUIRE(r.increase);
    CHECK(r.increase->first_increase <= 5);
    CHECK(r.increase->min_tail_increment >= 1e-6);
  }

  TEST_CASE("a broken counterexample is reported, not reproduced") {
    ScenarioConfig cfg = find_scenario("ex34").defaults;
    cfg.curves = {RadialRaySpec{0.0, 1.0}};
    CHECK_THROWS_AS(run_example(ExampleId::Ex34, cfg), CounterexampleNotReproduced);
    const ScenarioReport r = run_scenario(find_scenario("ex34"), cfg);
    CHECK_FALSE(r.passed());
  }

  TEST_CASE("closeness needs matching slopes") {
    ScenarioConfig cfg = find_scenario("closeness").defaults;
    cfg.curves = {RadialRaySpec{0.4, 1.0}, RadialRaySpec{0.5, 1.0}};
    CHECK_THROWS_AS(run_closeness(cfg), ConfigError);
  }

  TEST_CASE("outside the hypotheses the increase check is informational") {
    ScenarioConfig cfg = find_scenario("theorem-main").defaults;
    cfg.map = MapSpec::affine(1.0, 1.0);
    cfg.z = 1.0;
    CHECK_FALSE(theorem_hypotheses_hold(cfg));
    const ScenarioReport r = run_monotonicity(cfg);
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks.front().informational);
    CHECK(r.rows.size() == 41);
  }
}
