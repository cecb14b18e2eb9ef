#include <doctest.h>

#include "gft/geometry.hpp"

using namespace gft;

TEST_CASE("surface and volume constants") {
  const ConstantsN c2 = constants_n(2);
  CHECK(c2.omega == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
  CHECK(c2.Omega == doctest::Approx(M_PI).epsilon(1e-14));
  const ConstantsN c3 = constants_n(3);
  CHECK(c3.omega == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
  CHECK(c3.Omega == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-14));
  CHECK(c3.omega == doctest::Approx(3.0 * c3.Omega));
}

TEST_CASE("inversion") {
  CHECK(inversion({2.0, 0.0, 0.0}) == Point{0.5, 0.0, 0.0});
  const Point e = normalized({1.0, 2.0, -2.0});
  CHECK(dist(inversion(e), e) < 1e-15);
  const Point x{0.3, -0.4, 0.5};
  CHECK(dist(inversion(inversion(x)), x) < 1e-15);
  CHECK_THROWS(inversion({0.0, 0.0}));
}

TEST_CASE("chordal metric") {
  CHECK(chordal_distance_inf({0.0, 0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(chordal_distance({0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}) ==
        doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(chordal_distance({1.0, 0.0}, {0.0, 1.0}) ==
        doctest::Approx(std::sqrt(2.0) / 2.0));
}

TEST_CASE("chordal triangle inequality on sampled triples") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const Point a{u(rng), u(rng), u(rng)};
    const Point b{u(rng), u(rng), u(rng)};
    const Point c{u(rng), u(rng), u(rng)};
    CHECK(chordal_distance(a, c) <=
          chordal_distance(a, b) + chordal_distance(b, c) + 1e-12);
  }
}

TEST_CASE("cap areas") {
  CHECK(cap_area(M_PI, 3) == doctest::Approx(4.0 * M_PI).epsilon(1e-12));
  CHECK(cap_area(M_PI / 2.0, 3) == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
  CHECK(cap_area(M_PI, 2) == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
  CHECK(cap_area(0.7, 3) ==
        doctest::Approx(2.0 * M_PI * (1.0 - std::cos(0.7))).epsilon(1e-12));
  // generic-n branch agrees with the closed form at n = 3
  const ConstantsN c4 = constants_n(4);
  CHECK(cap_area(M_PI, 4) == doctest::Approx(c4.omega).epsilon(1e-8));
  CHECK(cap_ball_intersection_area(1.0) == doctest::Approx(M_PI));
  CHECK(cap_ball_intersection_area(0.1) == doctest::Approx(0.01 * M_PI));
}

TEST_CASE("sphere cap angle degenerate cases") {
  CHECK(sphere_cap_angle(0.5, 2.0, 0.1) == 0.0);   // sphere misses the ball
  CHECK(sphere_cap_angle(0.1, 0.2, 1.0) == M_PI);  // sphere inside the ball
  const double g = sphere_cap_angle(1.0, 1.0, 0.5);
  CHECK(std::cos(g) == doctest::Approx(1.0 - 0.125));  // law of cosines
}

TEST_CASE("frames are orthonormal") {
  const Frame f = make_frame({0.3, -0.2, 0.93});
  CHECK(norm(f.axis) == doctest::Approx(1.0));
  CHECK(norm(f.u) == doctest::Approx(1.0));
  CHECK(norm(f.v) == doctest::Approx(1.0));
  CHECK(dot(f.axis, f.u) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(dot(f.axis, f.v) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(dot(f.u, f.v) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("inclusion of the reflected half-ball") {
  const Point e1 = unit_axis(3, 0);
  CHECK(inclusion_plus_minus(e1, 0.3, 10000, 1).pass);
  CHECK(inclusion_plus_minus(unit_axis(3, 2), 0.9, 10000, 2).pass);
  // radial ray: |psi(zeta(1+t)) - zeta| = t/(1+t) < t
  const double t = 0.2;
  const Point x = (1.0 + t) * e1;
  CHECK(dist(inversion(x), e1) == doctest::Approx(t / (1.0 + t)));
}

TEST_CASE("lower norm bound near the boundary") {
  const SampledVerdict v = lower_norm_bound(unit_axis(3, 2), 0.49, 10000, 3);
  CHECK(v.pass);
  const SampledVerdict w = lower_norm_bound(unit_axis(3, 2), 0.1, 10000, 4);
  CHECK(w.pass);
  CHECK(w.worst_value >= 0.9);  // triangle inequality gives 1 - r
}
