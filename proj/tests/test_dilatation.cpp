#include <doctest.h>

#include <random>

#include "gft/dilatation.hpp"

using namespace gft;

TEST_CASE("distortion of simple matrices") {
  Mat d = Mat::zero(3);
  d(0, 0) = 2.0;
  d(1, 1) = 1.0;
  d(2, 2) = 1.0;
  const DistortionSample s = distortion_from_jacobian(d, {});
  CHECK(s.J == doctest::Approx(2.0));
  CHECK(s.l == doctest::Approx(1.0));
  CHECK(s.op_norm == doctest::Approx(2.0));
  CHECK(s.K_I == doctest::Approx(2.0));
  CHECK(s.K_O == doctest::Approx(4.0));

  Mat c = Mat::identity(3);
  for (int i = 0; i < 3; ++i) c(i, i) = 1.7;
  const DistortionSample sc = distortion_from_jacobian(c, {});
  CHECK(sc.K_I == doctest::Approx(1.0));
  CHECK(sc.K_O == doctest::Approx(1.0));

  const DistortionSample z = distortion_from_jacobian(Mat::zero(3), {});
  CHECK(z.K_I == 1.0);  // zero-derivative convention

  Mat rank2 = Mat::zero(3);
  rank2(0, 0) = 1.0;
  rank2(1, 1) = 1.0;
  const DistortionSample r = distortion_from_jacobian(rank2, {});
  CHECK(std::isinf(r.K_I));
}

TEST_CASE("scaling leaves dilatations unchanged") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat m = Mat::zero(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = u(rng);
  Mat m5 = m;
  for (auto& a : m5.a) a *= 5.0;
  const DistortionSample s1 = distortion_from_jacobian(m, {});
  const DistortionSample s2 = distortion_from_jacobian(m5, {});
  CHECK(s1.K_I == doctest::Approx(s2.K_I).epsilon(1e-10));
  CHECK(s1.K_O == doctest::Approx(s2.K_O).epsilon(1e-10));
}

TEST_CASE("planar inner and outer dilatations coincide") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    Mat m = Mat::zero(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = u(rng);
    const DistortionSample s = distortion_from_jacobian(m, {});
    if (!std::isfinite(s.K_I)) continue;
    CHECK(s.K_I == doctest::Approx(s.K_O).epsilon(1e-8));
    CHECK(s.K_I >= 1.0 - 1e-12);
  }
}

TEST_CASE("inner dilatation of the spiked radial map equals the profile") {
  const StepProfile p = StepProfile::example1();
  const DifferentiableMap f = as_map(RadialStretchMap{p, 3});
  std::vector<Point> pts;
  for (int i = 0; i < 40; ++i) {
    const double r = 0.1 + 0.8 * i / 39.0;
    bool near = false;
    for (double b : profile_breakpoints(p))
      if (std::abs(r - b) < 1e-4) near = true;
    if (!near) pts.push_back({r, 0.0, 0.0});
  }
  const std::vector<DistortionSample> field = k_i_field(f, pts, 1e-6);
  for (const DistortionSample& s : field) {
    REQUIRE(s.valid);
    const double beta = beta_eval(p, norm(s.point));
    CHECK(s.K_I == doctest::Approx(beta).epsilon(1e-4));
  }
}

TEST_CASE("identity field") {
  const DifferentiableMap id{
      3, "identity", [](const Point& x) { return x; }, nullptr};
  for (const DistortionSample& s :
       k_i_field(id, {{0.1, 0.2, 0.3}, {-0.5, 0.0, 0.1}}))
    CHECK(s.K_I == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("inner dilatation is invariant under reflection extension") {
  const InvarianceResult r =
      conformal_invariance_check(power_map(2.0), 50, 31);
  CHECK(r.max_rel_dev < 1e-3);
  const DifferentiableMap id{
      3, "identity", [](const Point& x) { return x; }, nullptr};
  CHECK(conformal_invariance_check(id, 50, 37).max_rel_dev < 1e-8);
}
