#include <doctest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "hyproj/curves.hpp"

using namespace hyproj;
using doctest::Approx;

namespace {

HalfPlanePoint pt(double re, double im = 0.0) { return HalfPlanePoint::from_cartesian(re, im); }

// Smallest Euclidean distance from p to a dense sample of c on [0, t_hi].
double trace_gap(const Curve& c, Complex p, double t_hi, int samples = 200000) {
  double best = std::abs(c.eval_complex(0.0) - p);
  for (int k = 1; k <= samples; ++k) best = std::min(best, std::abs(c.eval_complex(t_hi * k / samples) - p));
  return best;
}

}  // namespace

TEST_SUITE("curves") {
  TEST_CASE("radial ray") {
    const Curve c = radial_ray(Angle::of(0.0), 1.0);
    CHECK(std::abs(c.eval_complex(1.0) - Complex{2, 0}) == 0.0);
    const Curve tilted = radial_ray(Angle::of(0.7), 1.0);
    CHECK(tilted.eval(1e6).theta() == Approx(0.7).epsilon(1e-14));
    const HalfPlanePoint p = *tilted.analytic_projection(HalfPlanePoint::from_complex(std::polar(5.0, 0.3)));
    CHECK(std::abs(p.value() - std::polar(5.0, 0.7)) <= 1e-14);
    CHECK_THROWS_AS(radial_ray(Angle::of(0.1), 0.0), DomainError);
  }

  TEST_CASE("horizontal ray") {
    const Curve c = horizontal_ray(pt(1));
    CHECK(std::abs(c.analytic_projection(pt(3, 4))->value() - Complex{5, 0}) <= 1e-14);
    const HalfPlanePoint on = pt(7);
    CHECK(std::abs(c.analytic_projection(on)->value() - on.value()) == 0.0);
    const Curve shifted = horizontal_ray(pt(1, 1));
    for (double x : {0.5, 2.0, 10.0}) {
      const Complex want{std::sqrt(x * x + 1.0), 1.0};
      CHECK(std::abs(shifted.analytic_projection(pt(x))->value() - want) <= 1e-14);
    }
  }

  TEST_CASE("vertical ray") {
    const Curve c = vertical_ray(1.0, 1);
    CHECK(std::abs(c.eval_complex(2.0) - Complex{1, 2}) == 0.0);
    CHECK(c.is_tangential());
    CHECK(c.eval(1e9).theta() == Approx(std::numbers::pi / 2).epsilon(1e-9));
    CHECK_THROWS_AS(vertical_ray(0.0, 1), DomainError);
    CHECK_THROWS_AS(vertical_ray(1.0, 0), DomainError);
  }

  TEST_CASE("geodesic arcs") {
    const double e = std::numbers::e;
    const Complex top{std::sqrt(e * e - 1.0), 1.0};
    const CircularArc a = geodesic_arc(e, 0.0, std::arg(top));
    PiecewiseCurve walk;
    walk.then(a);
    CHECK(std::abs(walk.eval(0.0) - Complex{e, 0}) <= 1e-15);
    CHECK(std::abs(walk.end_point() - top) <= 1e-14);
    CHECK(std::abs(walk.eval(0.5 * walk.finite_length())) == Approx(e).epsilon(1e-15));
    for (int n = 1; n <= 5; ++n) {
      const double r = std::sqrt(1.0 + (2.0 * n + 1) * (2.0 * n + 1));
      const Complex low{2.0 * n + 1, -1.0};
      PiecewiseCurve arc;
      arc.then(geodesic_arc(r, 0.0, std::arg(low)));
      CHECK(std::abs(arc.eval(0.0) - Complex{r, 0}) <= 1e-14);
      CHECK(std::abs(arc.end_point() - low) <= 1e-13);
    }
    CHECK_THROWS_AS(geodesic_arc(-1.0, 0.0, 0.1), DomainError);
  }

  TEST_CASE("walks are continuous and parametrized by arclength") {
    PiecewiseCurve w;
    w.then(LineSegment{{1, 1}, {4, 1}}).detour(geodesic_arc(std::sqrt(17.0), std::atan2(1.0, 4.0), 0.0)).then(Ray{{4, 1}, 0.0});
    const auto pieces = w.pieces();
    REQUIRE(pieces.size() == 4);
    CHECK(pieces[1].t_begin == Approx(3.0));
    CHECK(std::abs(w.eval(pieces[2].t_begin) - Complex{std::sqrt(17.0), 0}) <= 1e-12);
    CHECK(std::abs(w.eval(pieces[3].t_begin) - Complex{4, 1}) <= 1e-12);
    // Modulus-of-continuity probe: the walk is 1-Lipschitz in t.
    const double h = 1e-4;
    for (double t = 0.0; t < pieces[3].t_begin + 5.0; t += 0.013)
      CHECK(std::abs(w.eval(t + h) - w.eval(t)) <= h * (1.0 + 1e-9));
    CHECK(std::abs(w.tangent(0.5)) == Approx(1.0));
  }

  TEST_CASE("walk construction errors") {
    PiecewiseCurve w;
    w.then(LineSegment{{1, 0}, {2, 0}});
    CHECK_THROWS_AS(w.then(LineSegment{{3, 0}, {4, 0}}), CurveError);
    w.then(Ray{{2, 0}, 0.0});
    CHECK_THROWS_AS(w.then(LineSegment{{2, 0}, {3, 0}}), CurveError);
    PiecewiseCurve v;
    CHECK_THROWS_AS(v.detour(Ray{{1, 0}, 0.0}), CurveError);
  }

  TEST_CASE("example curves contain their marked points") {
    const Curve ex31 = example_curve(ExampleId::Ex31, 4);
    const double end31 = *ex31.detail_end();
    for (int n = 1; n <= 4; ++n) CHECK(trace_gap(ex31, {std::exp(double(n)), 0.0}, end31) < 1e-3);

    const Curve ex32 = example_curve(ExampleId::Ex32Zero, 4);
    for (int n = 1; n <= 4; ++n) CHECK(trace_gap(ex32, {3.0 * n, 0.0}, *ex32.detail_end()) < 1e-3);

    const Curve ex33 = example_curve(ExampleId::Ex33, 1);
    const double sqrt2 = std::numbers::sqrt2;
    const double span = ex33.path().pieces().back().t_begin + 10.0;
    for (Complex p : {Complex{sqrt2, 0}, Complex{2 * sqrt2, 0}, Complex{4 * sqrt2, 0}, Complex{5 * sqrt2, 0}})
      CHECK(trace_gap(ex33, p, span) < 1e-3);
    CHECK(ex33.path().unbounded());
  }

  TEST_CASE("example ids") {
    for (ExampleId id : {ExampleId::Ex31, ExampleId::Ex32Zero, ExampleId::Ex32Pos, ExampleId::Ex33, ExampleId::Ex34})
      CHECK(parse_example_id(to_string(id)) == id);
    CHECK_THROWS_AS(parse_example_id("ex35"), ConfigError);
    CHECK_THROWS_AS(example_curve(ExampleId::Ex31, 0), DomainError);
  }

  TEST_CASE("example curves stay in the half-plane and escape") {
    for (ExampleId id : {ExampleId::Ex31, ExampleId::Ex32Zero, ExampleId::Ex32Pos, ExampleId::Ex33, ExampleId::Ex34}) {
      const Curve c = example_curve(id, 6);
      const double end = c.path().pieces().back().t_begin;
      for (int k = 0; k <= 2000; ++k) CHECK(c.eval(end * k / 2000).re() > 0.0);
      double previous = 0.0;
      for (double t = end + 1.0; t < end + 1e8; t *= 2.0) {
        const double m = c.eval(t).modulus();
        CHECK(m > previous);
        previous = m;
      }
    }
  }

  TEST_CASE("slope cluster") {
    const Curve ray = radial_ray(Angle::of(0.4), 1.0);
    const SlopeInterval s = slope_cluster(ray, 10.0, 1e6, 100);
    CHECK(s.min == Approx(0.4).epsilon(1e-13));
    CHECK(s.max == Approx(0.4).epsilon(1e-13));
    const Curve ex31 = example_curve(ExampleId::Ex31, 8);
    const double late = *ex31.detail_end();
    const SlopeInterval comb = slope_cluster(ex31, 0.8 * late, late, 400);
    CHECK(comb.max - comb.min < 0.1);
    CHECK(std::abs(comb.max) < 0.1);
    const SlopeInterval vertical = slope_cluster(vertical_ray(1.0, 1), 1e6, 1e7, 10);
    CHECK(vertical.min > std::numbers::pi / 2 - 1e-5);
    CHECK_THROWS_AS(slope_cluster(ray, 5.0, 1.0, 10), DomainError);
  }

  TEST_CASE("declared slope matches the tail of every built-in curve") {
    for (int k = 0; k < 50; ++k) {
      const double th = testing::slope();
      const Curve c = shifted_ray(Complex{testing::uniform(0.5, 5.0), testing::uniform(-5.0, 5.0)}, Angle::of(th));
      CHECK(c.eval(1e12).theta() == Approx(th).epsilon(1e-9));
    }
  }

  TEST_CASE("make_curve builds each curve kind") {
    const Curve c = make_curve(RadialRaySpec{0.3, 2.0});
    CHECK(std::abs(c.eval_complex(0.0) - std::polar(2.0, 0.3)) <= 1e-15);
    CHECK(make_curve(VerticalRaySpec{2.0, -1}).is_tangential());
    CHECK(make_curve(ExampleCurveSpec{ExampleId::Ex33, 1}).declared_slope()->radians() == 0.0);
  }
}
