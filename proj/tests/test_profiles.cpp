#include <doctest.h>

#include <random>

#include "gft/profiles.hpp"

using namespace gft;

TEST_CASE("step profile pointwise values") {
  const StepProfile p1 = StepProfile::example1();
  CHECK(beta_eval(p1, 0.5) == 1.0);  // breakpoint k/(k+1), k = 1
  CHECK(beta_eval(p1, 2.0 / 3.0 - std::ldexp(1.0, -6)) == 2.0);  // spike k=1
  CHECK(beta_eval(p1, 0.55) == 1.0);  // flat part
  CHECK(beta_eval(p1, 1.0) == 1.0);
  CHECK_THROWS(beta_eval(p1, 0.0));
  CHECK_THROWS(beta_eval(p1, 1.5));

  const StepProfile p4 = StepProfile::example4();
  CHECK(beta_eval(p4, 1.0 - std::ldexp(1.0, -6)) == 1.0);  // spike k=1, 2^0
  CHECK(beta_eval(p4, 0.5 - std::ldexp(1.0, -10)) == 2.0);  // spike k=2, 2^1
  CHECK(beta_eval(p4, 0.4) == 1.0);
  // equals 1 on a neighborhood of t = 1
  for (double t = 0.969; t < 1.0; t += 0.005) CHECK(beta_eval(p4, t) == 1.0);
}

TEST_CASE("profile values are >= 1 everywhere") {
  const StepProfile p = StepProfile::example1();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(1e-6, 1.0);
  for (int i = 0; i < 2000; ++i) CHECK(beta_eval(p, u(rng)) >= 1.0);
}

TEST_CASE("closed-form integral of the spiked profile") {
  const StepProfile p = StepProfile::example1();
  // 1 + sum_k (2^k - 1) 2^{-4k-1} = 1 + 4/105
  CHECK(integrate_beta_power(p, 1, Weight::One, 1e-15, 1.0) ==
        doctest::Approx(1.0 + 4.0 / 105.0).epsilon(1e-12));
  for (int i = 1; i <= 100; ++i) {
    const double a = i / 101.0;
    CHECK(integrate_beta_power(p, 1, Weight::One, a, 1.0) <= 2.0 * (1.0 - a));
  }
  for (double eps : {0.9, 0.5, 0.1, 0.01})
    CHECK(integrate_beta_power(p, 1, Weight::One, 1.0 - eps, 1.0) <= 2.0 * eps);
  CHECK(integrate_beta_power(p, 3, Weight::One, 0.5, 1.0) <= 1.5);
}

TEST_CASE("closed forms agree with breakpoint-aware quadrature") {
  const StepProfile p = StepProfile::example1();
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int i = 0; i < 50; ++i) {
    double a = u(rng), b = u(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) continue;
    const double exact = integrate_beta_power(p, 1, Weight::T2, a, b);
    auto f = [&](double t) { return beta_eval(p, t) * t * t; };
    const double quad =
        integrate_1d(f, a, b, {}, profile_breakpoints(p, a, b)).value;
    CHECK(exact == doctest::Approx(quad).epsilon(1e-10));
  }
}

TEST_CASE("log-weighted antiderivative") {
  const StepProfile one = StepProfile::constant_one();
  CHECK(integrate_beta_over_t(one, 0.25) == doctest::Approx(std::log(0.25)));
  const StepProfile p = StepProfile::example1();
  auto f = [&](double t) { return beta_eval(p, t) / t; };
  const double quad =
      integrate_1d(f, 0.3, 1.0, {}, profile_breakpoints(p, 0.3, 1.0)).value;
  CHECK(integrate_beta_over_t(p, 0.3) == doctest::Approx(-quad).epsilon(1e-10));
}

TEST_CASE("regularity-gate classification") {
  const OrliczFunction cubic{[](double t) { return t * t * t; }, "t^3"};
  const OrliczFunction square{[](double t) { return t * t; }, "t^2"};
  CHECK(calderon_check(cubic, 3) == CalderonVerdict::Satisfied);
  CHECK(calderon_check(square, 3) == CalderonVerdict::Violated);
  CHECK(calderon_check(cubic, 4) == CalderonVerdict::Violated);
}

TEST_CASE("doubling classification") {
  const OrliczFunction p3{[](double t) { return t * t * t; }, "t^3"};
  const DoublingReport r = doubling_check(p3, 1.0);
  CHECK(r.holds);
  CHECK(r.C_est == doctest::Approx(8.0).epsilon(1e-10));
  const OrliczFunction loggy{
      [](double t) { return t * t * t * std::log(M_E + t); }, "t^3 log"};
  const DoublingReport rl = doubling_check(loggy, 1.0);
  CHECK(rl.holds);
  CHECK(rl.C_est <= 16.0);
  const OrliczFunction expf{[](double t) { return std::exp(t); }, "e^t"};
  CHECK_FALSE(doubling_check(expf, 1.0).holds);
}

TEST_CASE("gradient-class inclusion report") {
  const OrliczFunction t4{[](double t) { return std::pow(t, 4.0); }, "t^4"};
  const SobolevReport a = sobolev_inclusion_report(t4, 3, 4.0);
  CHECK(a.w1p_inclusion);
  CHECK(a.morrey_alpha == doctest::Approx(0.25));
  const OrliczFunction t3{[](double t) { return t * t * t; }, "t^3"};
  const SobolevReport b = sobolev_inclusion_report(t3, 3, 4.0);
  CHECK_FALSE(b.w1p_inclusion);
  CHECK(b.calderon == CalderonVerdict::Satisfied);
  const OrliczFunction t2{[](double t) { return t * t; }, "t^2"};
  CHECK(sobolev_inclusion_report(t2, 3, 2.5).calderon ==
        CalderonVerdict::Violated);
}
