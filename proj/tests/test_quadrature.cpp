#include <doctest.h>

#include <stdexcept>

#include "gft/linalg.hpp"
#include "gft/quadrature.hpp"

using namespace gft;

TEST_CASE("integrate_1d basics") {
  CHECK(integrate_1d([](double t) { return t; }, 0, 1).value ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(integrate_1d([](double t) { return std::sin(t); }, 0, M_PI).value ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("integrate_1d endpoint singularity") {
  const QuadratureResult r =
      integrate_1d([](double t) { return 1.0 / std::sqrt(t); }, 1e-300, 1.0);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("integrate_1d respects breakpoints") {
  auto f = [](double t) { return t < 0.3 ? 1.0 : 5.0; };
  const QuadratureResult r = integrate_1d(f, 0.0, 1.0, {}, {0.3});
  CHECK(r.value == doctest::Approx(0.3 + 5.0 * 0.7).epsilon(1e-12));
  CHECK(r.converged);
}

TEST_CASE("integrate_1d additivity and linearity") {
  auto f = [](double t) { return std::exp(-t) * std::cos(3.0 * t); };
  const double whole = integrate_1d(f, 0.0, 2.0).value;
  const double split =
      integrate_1d(f, 0.0, 0.7).value + integrate_1d(f, 0.7, 2.0).value;
  CHECK(whole == doctest::Approx(split).epsilon(1e-10));
  auto g = [](double t) { return t * t; };
  auto combo = [&](double t) { return 2.0 * f(t) + 3.0 * g(t); };
  CHECK(integrate_1d(combo, 0.0, 2.0).value ==
        doctest::Approx(2.0 * whole + 3.0 * integrate_1d(g, 0.0, 2.0).value)
            .epsilon(1e-10));
}

TEST_CASE("integrate_1d NaN raises") {
  CHECK_THROWS_AS(
      integrate_1d([](double) { return std::nan(""); }, 0.0, 1.0),
      std::domain_error);
}

TEST_CASE("tail verdicts") {
  const TailResult conv = integrate_tail([](double t) { return 1.0 / (t * t); }, 1.0);
  CHECK(conv.verdict == TailVerdict::Converged);
  CHECK(conv.estimate.value == doctest::Approx(1.0).epsilon(1e-6));
  const TailResult div = integrate_tail([](double t) { return 1.0 / t; }, 1.0);
  CHECK(div.verdict == TailVerdict::Divergent);
  // t / t^3 with exponent 1: the n = 3 regularity-gate integrand
  const TailResult gate =
      integrate_tail([](double t) { return t / (t * t * t); }, 1.0);
  CHECK(gate.verdict == TailVerdict::Converged);
  CHECK(gate.estimate.value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("sphere rule weights and symmetry") {
  const SphereRule r3 = make_sphere_rule(3);
  double total = 0.0, z2 = 0.0;
  for (const SphereNode& n : r3) {
    total += n.w;
    z2 += n.w * n.x[2] * n.x[2];
  }
  CHECK(total == doctest::Approx(4.0 * M_PI).epsilon(1e-12));
  CHECK(z2 == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-12));
  const SphereRule r2 = make_sphere_rule(2);
  double total2 = 0.0;
  for (const SphereNode& n : r2) total2 += n.w;
  CHECK(total2 == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
}

TEST_CASE("cap rule covers the hemisphere") {
  const SphereRule cap = make_cap_rule(unit_axis(3, 2), M_PI / 2.0, 48, 96);
  double total = 0.0;
  for (const SphereNode& n : cap) total += n.w;
  CHECK(total == doctest::Approx(2.0 * M_PI).epsilon(1e-10));
}

TEST_CASE("refined rule integrates a boundary-peaked integrand") {
  const Point axis = unit_axis(3, 2);
  const double r = 0.99;
  const SphereRule rule = make_sphere_rule_refined(axis, 1.0 - r);
  // Int (1-r^2)/|r e3 - t|^3 dH = omega_2 (Poisson normalization)
  auto g = [&](const Point& t) {
    const Point x = r * axis;
    return (1.0 - r * r) / std::pow(dist(x, t), 3);
  };
  CHECK(integrate_sphere(g, rule).value ==
        doctest::Approx(4.0 * M_PI).epsilon(1e-9));
}

TEST_CASE("ball quadrature") {
  const Point origin(3, 0.0);
  auto one = [](const Point&) { return 1.0; };
  CHECK(integrate_ball(one, 3, BallRegion::ball(origin, 1.0)).value ==
        doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-10));
  CHECK(integrate_ball(one, 3, BallRegion::annulus(origin, 0.5, 1.0)).value ==
        doctest::Approx(4.0 * M_PI / 3.0 * (1.0 - 0.125)).epsilon(1e-10));
  auto inv2 = [](const Point& x) { return 1.0 / norm_sq(x); };
  CHECK(integrate_ball(inv2, 3, BallRegion::ball(origin, 1.0)).value ==
        doctest::Approx(4.0 * M_PI).epsilon(1e-6));
}

TEST_CASE("ball quadrature of boundary intersections") {
  // B(zeta0, eps) ∩ B^3 and its reflected complement partition B(zeta0, eps)
  const Point zeta0 = unit_axis(3, 2);
  const double eps = 0.4;
  auto one = [](const Point&) { return 1.0; };
  const double minus =
      integrate_ball(one, 3, BallRegion::cap_minus(zeta0, eps)).value;
  const double plus =
      integrate_ball(one, 3, BallRegion::cap_plus(zeta0, eps)).value;
  CHECK(minus + plus ==
        doctest::Approx(4.0 * M_PI / 3.0 * eps * eps * eps).epsilon(1e-6));
  // two-ball lens volume, radii R = 1 and r = eps, centers at distance d = 1
  const double oracle = M_PI * eps * eps *
                        (2.0 * eps - 3.0 * eps * eps + 6.0 * eps) / 12.0;
  CHECK(minus == doctest::Approx(oracle).epsilon(1e-6));
}

TEST_CASE("gauss-legendre nodes") {
  std::vector<double> x, w;
  gauss_legendre(5, x, w);
  double s = 0.0, p4 = 0.0;
  for (int i = 0; i < 5; ++i) {
    s += w[i];
    p4 += w[i] * std::pow(x[i], 4);
  }
  CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(p4 == doctest::Approx(0.4).epsilon(1e-14));  // exact for degree <= 9
}

TEST_CASE("singular values and determinants") {
  Mat m = Mat::zero(3);
  m(0, 0) = 2.0;
  m(1, 1) = 1.0;
  m(2, 2) = 1.0;
  CHECK(det(m) == doctest::Approx(2.0));
  const std::vector<double> sv = singular_values(m);
  CHECK(sv[0] == doctest::Approx(2.0));
  CHECK(sv[2] == doctest::Approx(1.0));

  Mat r = Mat::zero(3);
  // rotation-ish plus shear
  r(0, 0) = 0.8;
  r(0, 1) = -0.6;
  r(1, 0) = 0.6;
  r(1, 1) = 0.8;
  r(2, 2) = 1.0;
  r(0, 2) = 0.3;
  const std::vector<double> sr = singular_values(r);
  CHECK(std::abs(det(r)) ==
        doctest::Approx(sr[0] * sr[1] * sr[2]).epsilon(1e-10));
}
