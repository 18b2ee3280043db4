#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "generators.hpp"
#include "hyproj/geometry.hpp"

using namespace hyproj;
using doctest::Approx;

namespace {

HalfPlanePoint pt(double re, double im = 0.0) { return HalfPlanePoint::from_cartesian(re, im); }

// d(p, q) for real 0 < p <= q.
double real_axis(double p, double q) { return 0.5 * (std::log(q) - std::log(p)); }

const double kSqrt2 = std::numbers::sqrt2;

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("points reject the boundary and non-finite input") {
    CHECK_THROWS_AS(pt(0.0, 1.0), InvalidPoint);
    CHECK_THROWS_AS(pt(-1.0, 0.0), InvalidPoint);
    CHECK_THROWS_AS(pt(std::numeric_limits<double>::quiet_NaN(), 0.0), InvalidPoint);
    CHECK_THROWS_AS(pt(1.0, std::numeric_limits<double>::infinity()), InvalidPoint);
    CHECK_THROWS_AS(HalfPlanePoint::from_polar(0.0, 1.6), InvalidPoint);
    CHECK_THROWS_AS(HalfPlanePoint::from_polar(std::numeric_limits<double>::infinity(), 0.0), InvalidPoint);
  }

  TEST_CASE("cartesian and log-polar views agree") {
    for (int k = 0; k < 1000; ++k) {
      const HalfPlanePoint z = testing::point(1e-300, 1e300);
      const HalfPlanePoint back = HalfPlanePoint::from_polar(z.log_r(), z.theta());
      CHECK(back.re() == Approx(z.re()).epsilon(1e-14 * std::max(1.0, std::abs(z.log_r()))));
      CHECK(std::abs(back.im() - z.im()) <= 1e-14 * std::max(1.0, std::abs(z.log_r())) * z.modulus());
    }
  }

  TEST_CASE("points beyond the double range keep only log-polar form") {
    const HalfPlanePoint far = HalfPlanePoint::from_polar(1000.0, 0.2);
    CHECK_FALSE(far.has_cartesian());
    CHECK(std::isinf(far.modulus()));
    CHECK_THROWS_AS(far.value(), DomainError);
  }

  TEST_CASE("dist_h examples") {
    CHECK(dist_h(pt(1), pt(2)).value() == Approx(0.5 * std::log(2.0)).epsilon(1e-15));
    CHECK(dist_h(pt(2), pt(2 * kSqrt2)).value() == Approx(0.25 * std::log(2.0)).epsilon(1e-15));
    CHECK(dist_h(pt(1, 5), pt(2, 5)).value() == Approx(0.5 * std::log(2.0)).epsilon(1e-15));
    CHECK(dist_h(pt(3, 4), pt(3, 4)).value() == 0.0);
  }

  TEST_CASE("rho_h, one_minus_rho_sq and cosh_dist examples") {
    CHECK(rho_h(pt(2), pt(3)) == Approx(0.2).epsilon(1e-15));
    CHECK(rho_h(pt(2), pt(2 * kSqrt2)) == Approx(3.0 - 2.0 * kSqrt2).epsilon(1e-14));
    CHECK(rho_h(pt(1, 1), pt(1, 1)) == 0.0);
    CHECK(one_minus_rho_sq(pt(2), pt(3)) == Approx(24.0 / 25.0).epsilon(1e-15));
    CHECK(one_minus_rho_sq(pt(1), pt(1, 1)) == Approx(0.8).epsilon(1e-15));
    CHECK(one_minus_rho_sq(pt(7, 1), pt(7, 1)) == Approx(1.0).epsilon(1e-15));
    CHECK(cosh_dist(pt(1), pt(2)) == Approx(3.0 / (2.0 * kSqrt2)).epsilon(1e-15));
    CHECK(cosh_dist(pt(1), pt(1, 1)) == Approx(std::sqrt(5.0) / 2.0).epsilon(1e-15));
    CHECK(cosh_dist(pt(4, 2), pt(4, 2)) == 1.0);
  }

  TEST_CASE("distance stays accurate near the boundary") {
    // Exact along the real axis even when rho rounds to 1.
    for (double q : {1e8, 1e12, 1e16, 1e30, 1e100})
      CHECK(dist_h(pt(1), pt(q)).value() == Approx(real_axis(1.0, q)).epsilon(1e-14));
    CHECK(dist_h(pt(1e-200), pt(1e200)).value() == Approx(real_axis(1e-200, 1e200)).epsilon(1e-14));
  }

  TEST_CASE("dist_h_logpolar") {
    CHECK(dist_h_logpolar(0, 0, std::log(2.0), 0).value() == Approx(0.5 * std::log(2.0)).epsilon(1e-15));
    for (double th : {-1.2, 0.0, 0.4, 1.5}) CHECK(dist_h_logpolar(0, th, 0, th).value() == 0.0);
    const double ln2 = std::log(2.0);
    const double far = dist_h_logpolar(1000 * ln2, 0.1, 1001 * ln2, 0.1).value();
    const double near = dist_h(HalfPlanePoint::from_complex(std::polar(1.0, 0.1)),
                               HalfPlanePoint::from_complex(std::polar(2.0, 0.1)))
                            .value();
    CHECK(std::abs(far - near) <= 1e-9);
    CHECK_THROWS(dist_h_logpolar(std::numeric_limits<double>::quiet_NaN(), 0, 0, 0));
  }

  TEST_CASE("log-polar and cartesian distances agree") {
    for (int k = 0; k < 2000; ++k) {
      const HalfPlanePoint a = testing::point(), b = testing::point();
      const double d = dist_h(a, b).value();
      CHECK(dist_h_logpolar(a.log_r(), a.theta(), b.log_r(), b.theta()).value() == Approx(d).epsilon(1e-11));
    }
  }

  TEST_CASE("dist_angles") {
    CHECK(dist_angles(Angle::of(0.3), Angle::of(0.3)).value() == 0.0);
    CHECK(dist_angles(Angle::of(0.0), Angle::of(std::numbers::pi / 3)).value() ==
          Approx(std::atanh(1.0 / std::sqrt(3.0))).epsilon(1e-14));
    const double d = dist_angles(Angle::of(-0.2), Angle::of(0.2)).value();
    CHECK(d == Approx(dist_angles(Angle::of(0.2), Angle::of(-0.2)).value()).epsilon(1e-15));
    CHECK(d == Approx(dist_h(HalfPlanePoint::from_complex(std::polar(1.0, -0.2)),
                             HalfPlanePoint::from_complex(std::polar(1.0, 0.2)))
                          .value())
                   .epsilon(1e-14));
    CHECK_THROWS_AS(dist_angles(Angle::tangential(1), Angle::of(0.0)), DomainError);
  }

  TEST_CASE("angles outside the open interval are rejected") {
    CHECK_THROWS_AS(Angle::of(std::numbers::pi / 2), DomainError);
    CHECK_THROWS_AS(Angle::of(-2.0), DomainError);
    CHECK_THROWS_AS(Angle::tangential(0), DomainError);
    CHECK(Angle::tangential(-1).is_tangential());
  }

  TEST_CASE("project_to_ray") {
    const HalfPlanePoint z = HalfPlanePoint::from_complex(std::polar(5.0, 0.3));
    const HalfPlanePoint p = project_to_ray(z, Angle::of(0.7), 1.0);
    CHECK(p.modulus() == Approx(5.0).epsilon(1e-14));
    CHECK(p.theta() == Approx(0.7).epsilon(1e-15));
    const HalfPlanePoint on = HalfPlanePoint::from_complex(std::polar(3.0, 0.7));
    CHECK(dist_h(project_to_ray(on, Angle::of(0.7), 1.0), on).value() <= 1e-15);
    const HalfPlanePoint clamped = project_to_ray(HalfPlanePoint::from_complex(std::polar(0.5, 0.3)), Angle::of(0.7), 1.0);
    CHECK(clamped.modulus() == Approx(1.0).epsilon(1e-15));
  }

  TEST_CASE("project_to_ray minimizes over the ray") {
    for (int k = 0; k < 200; ++k) {
      const HalfPlanePoint z = testing::point(1e-2, 1e3);
      const Angle th = Angle::of(testing::slope());
      const double r_min = testing::uniform(0.1, 10.0);
      const double best = dist_h(z, project_to_ray(z, th, r_min)).value();
      for (int j = 0; j < 50; ++j) {
        const double r = r_min * std::exp(testing::uniform(0.0, 12.0));
        CHECK(dist_h(z, HalfPlanePoint::from_complex(std::polar(r, th.radians()))).value() >= best - 1e-12);
      }
    }
  }

  TEST_CASE("sector_halfwidth") {
    const HypDistance quarter(0.25 * std::log(2.0));
    const Sector s = sector_halfwidth(Angle::of(0.0), quarter);
    CHECK(s.bounded);
    CHECK(s.lower.radians() == Approx(-s.upper.radians()).epsilon(1e-14));
    CHECK(std::tan(s.upper.radians() / 2) == Approx(std::tanh(quarter.value())).epsilon(1e-13));
    for (int k = 0; k < 100; ++k) {
      const Angle th = Angle::of(testing::slope(1.2));
      const HypDistance R(testing::uniform(0.01, 2.0));
      const Sector sec = sector_halfwidth(th, R);
      if (!sec.bounded) continue;
      CHECK(dist_angles(th, sec.upper).value() == Approx(R.value()).epsilon(1e-9));
      CHECK(dist_angles(th, sec.lower).value() == Approx(R.value()).epsilon(1e-9));
    }
    const Sector wide = sector_halfwidth(Angle::of(1.3), HypDistance(50.0));
    CHECK_FALSE(wide.bounded);
    CHECK(wide.upper.is_tangential());
  }

  TEST_CASE("pseudo-hyperbolic discs") {
    CHECK(in_pseudo_disc(pt(2), pt(2), 0.5));
    CHECK_FALSE(in_pseudo_disc(pt(3), pt(2), 0.2));
    CHECK(in_pseudo_disc(pt(2.9), pt(2), 0.2));
    CHECK_THROWS_AS(in_pseudo_disc(pt(1), pt(2), 1.0), DomainError);
    for (int k = 0; k < 2000; ++k) {
      const HalfPlanePoint z = testing::point(0.1, 10), c = testing::point(0.1, 10);
      const double r = testing::uniform(0.05, 0.95);
      const double rho = rho_h(z, c);
      if (std::abs(rho - r) < 1e-9) continue;
      CHECK(in_pseudo_disc(z, c, r) == in_pseudo_disc_quadratic(z, c, r));
    }
  }

  TEST_CASE("hyperbolic circles as Euclidean circles") {
    const HypDistance quarter(0.25 * std::log(2.0));
    const EuclideanCircle a = hyperbolic_circle_euclid(2.0, quarter);
    CHECK(a.center + a.radius == Approx(2 * kSqrt2).epsilon(1e-15));
    CHECK(a.center - a.radius == Approx(kSqrt2).epsilon(1e-15));
    const EuclideanCircle b = hyperbolic_circle_euclid(4.0, quarter);
    CHECK(b.center - b.radius == Approx(2 * kSqrt2).epsilon(1e-15));
    const EuclideanCircle tiny = hyperbolic_circle_euclid(3.0, HypDistance(1e-12));
    CHECK(tiny.center == Approx(3.0));
    CHECK(tiny.radius < 1e-10);
    // Every point of the Euclidean circle is at distance R from c.
    for (int k = 0; k < 64; ++k) {
      const double phi = -1.5 + 3.0 * k / 63;
      const Complex p = Complex{a.center, 0} + std::polar(a.radius, phi);
      CHECK(dist_h(pt(2), HalfPlanePoint::from_complex(p)).value() == Approx(quarter.value()).epsilon(1e-12));
    }
  }

  TEST_CASE("cayley transform") {
    CHECK(std::abs(cayley_to_halfplane(DiscPoint(0, 0)).value() - Complex{1, 0}) == 0.0);
    CHECK(std::abs(cayley_to_halfplane(DiscPoint(0.5, 0)).value() - Complex{3, 0}) <= 1e-15);
    CHECK_THROWS_AS(DiscPoint(1.0, 0.0), DomainError);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const DiscPoint p = testing::disc_point();
      worst = std::max(worst, std::abs(cayley_to_disc(cayley_to_halfplane(p)).value() - p.value()));
    }
    CHECK(worst < 1e-14);
  }

  TEST_CASE("disc distance") {
    CHECK(dist_d(DiscPoint(0, 0), DiscPoint(0, 0)).value() == 0.0);
    CHECK(dist_d(DiscPoint(0, 0), DiscPoint(0.5, 0)).value() == Approx(0.5 * std::log(3.0)).epsilon(1e-14));
    for (int k = 0; k < 200; ++k) {
      const DiscPoint a = testing::disc_point(), b = testing::disc_point();
      CHECK(dist_d(a, b).value() == Approx(dist_d(b, a).value()).epsilon(1e-13));
      CHECK(dist_d(a, b).value() ==
            Approx(dist_h(cayley_to_halfplane(a), cayley_to_halfplane(b)).value()).epsilon(1e-9));
    }
  }

  TEST_CASE("metric axioms on random points") {
    for (int k = 0; k < 5000; ++k) {
      const HalfPlanePoint a = testing::point(), b = testing::point(), c = testing::point();
      const double ab = dist_h(a, b).value();
      CHECK(ab >= 0.0);
      CHECK(ab == Approx(dist_h(b, a).value()).epsilon(1e-13));
      CHECK(dist_h(a, c).value() <= ab + dist_h(b, c).value() + 1e-12);
    }
  }

  TEST_CASE("automorphisms a z + i s preserve distance") {
    for (int k = 0; k < 2000; ++k) {
      const HalfPlanePoint a = testing::point(1e-2, 1e2), b = testing::point(1e-2, 1e2);
      const double scale = std::exp(testing::uniform(-5.0, 5.0));
      const double shift = testing::uniform(-100.0, 100.0);
      const auto move = [&](const HalfPlanePoint& p) {
        return HalfPlanePoint::from_complex(scale * p.value() + Complex{0.0, shift});
      };
      CHECK(dist_h(move(a), move(b)).value() == Approx(dist_h(a, b).value()).epsilon(1e-9));
    }
  }
}
