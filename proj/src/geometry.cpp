#include "gft/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gft {

double norm_sq(const Point& x) {
  double s = 0.0;
  for (double c : x) s += c * c;
  return s;
}

double norm(const Point& x) { return std::sqrt(norm_sq(x)); }

double dot(const Point& x, const Point& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double dist(const Point& x, const Point& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Point operator+(const Point& x, const Point& y) {
  Point r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Point operator-(const Point& x, const Point& y) {
  Point r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Point operator*(double c, const Point& x) {
  Point r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

Point normalized(const Point& x) {
  const double n = norm(x);
  if (n == 0.0) throw std::domain_error("normalized: zero vector");
  return (1.0 / n) * x;
}

Point unit_axis(int n, int k) {
  Point e(static_cast<std::size_t>(n), 0.0);
  e[static_cast<std::size_t>(k)] = 1.0;
  return e;
}

ConstantsN constants_n(int n) {
  if (n < 2) throw std::invalid_argument("constants_n: n must be >= 2");
  // omega_{n-1} = 2 pi^{n/2} / Gamma(n/2), Omega_n = omega_{n-1} / n.
  const double omega =
      2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
  return ConstantsN{n, omega, omega / n};
}

bool on_unit_sphere(const Point& x) {
  return std::abs(norm(x) - 1.0) < kOnSphereTol;
}

BallRegion BallRegion::ball(Point center, double r) {
  return {RegionKind::Ball, std::move(center), 0.0, r};
}
BallRegion BallRegion::annulus(Point center, double r_inner, double r_outer) {
  if (!(r_inner < r_outer))
    throw std::invalid_argument("annulus: r_inner must be < r_outer");
  return {RegionKind::Annulus, std::move(center), r_inner, r_outer};
}
BallRegion BallRegion::cap_plus(Point center_on_sphere, double eps) {
  if (!on_unit_sphere(center_on_sphere))
    throw std::invalid_argument("cap_plus: center must lie on S^{n-1}");
  return {RegionKind::BallCapPlus, std::move(center_on_sphere), 0.0, eps};
}
BallRegion BallRegion::cap_minus(Point center_on_sphere, double eps) {
  if (!on_unit_sphere(center_on_sphere))
    throw std::invalid_argument("cap_minus: center must lie on S^{n-1}");
  return {RegionKind::BallCapMinus, std::move(center_on_sphere), 0.0, eps};
}
BallRegion BallRegion::intersect_unit_ball(Point center, double r) {
  return {RegionKind::BallIntersectUnitBall, std::move(center), 0.0, r};
}

Point inversion(const Point& x) {
  const double s = norm_sq(x);
  if (s == 0.0) throw std::domain_error("inversion: undefined at 0");
  return (1.0 / s) * x;
}

double chordal_distance(const Point& x, const Point& y) {
  return dist(x, y) /
         (std::sqrt(1.0 + norm_sq(x)) * std::sqrt(1.0 + norm_sq(y)));
}

double chordal_distance_inf(const Point& x) {
  return 1.0 / std::sqrt(1.0 + norm_sq(x));
}

double cap_area(double phi, int n) {
  if (phi < 0.0 || phi > M_PI)
    throw std::invalid_argument("cap_area: phi outside [0, pi]");
  // A(phi) = c_n * Int_0^phi sin^{n-2}, with c_n fixed by A(pi) = omega_{n-1}
  // (c_2 = 2, c_3 = 2 pi).
  if (n == 2) return 2.0 * phi;
  if (n == 3) return 2.0 * M_PI * (1.0 - std::cos(phi));
  const ConstantsN cn = constants_n(n);
  const double full = std::sqrt(M_PI) * std::tgamma(0.5 * (n - 1)) /
                      std::tgamma(0.5 * n);  // Int_0^pi sin^{n-2}
  // composite Simpson on sin^{n-2}
  const int m = 512;
  const double h = phi / m;
  double s = 0.0;
  for (int i = 0; i <= m; ++i) {
    const double t = i * h;
    const double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    s += w * std::pow(std::sin(t), n - 2);
  }
  return cn.omega / full * s * h / 3.0;
}

double cap_ball_intersection_area(double eps, int n) {
  if (n != 3) throw std::invalid_argument("cap_ball_intersection_area: n = 3 only");
  if (!(eps > 0.0 && eps < 2.0))
    throw std::invalid_argument("cap_ball_intersection_area: eps outside (0, 2)");
  return M_PI * eps * eps;
}

double sphere_cap_angle(double r, double d, double eps) {
  const double c = (r * r + d * d - eps * eps) / (2.0 * r * d);
  if (c >= 1.0) return 0.0;
  if (c <= -1.0) return M_PI;
  return std::acos(c);
}

Frame make_frame(const Point& axis) {
  Frame f;
  f.axis = normalized(axis);
  const int n = static_cast<int>(axis.size());
  if (n == 2) {
    f.u = {-f.axis[1], f.axis[0]};
    f.v = {};
    return f;
  }
  if (n != 3) throw std::invalid_argument("make_frame: n must be 2 or 3");
  // pick the coordinate axis least aligned with f.axis
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(f.axis[i]) < std::abs(f.axis[k])) k = i;
  Point e = unit_axis(3, k);
  Point u = e - dot(e, f.axis) * f.axis;
  f.u = normalized(u);
  f.v = {f.axis[1] * f.u[2] - f.axis[2] * f.u[1],
         f.axis[2] * f.u[0] - f.axis[0] * f.u[2],
         f.axis[0] * f.u[1] - f.axis[1] * f.u[0]};
  return f;
}

Point sample_ball(std::mt19937_64& rng, const Point& center, double r) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = center.size();
  Point x(n);
  for (;;) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = u(rng);
      s += x[i] * x[i];
    }
    if (s <= 1.0) break;
  }
  for (std::size_t i = 0; i < n; ++i) x[i] = center[i] + r * x[i];
  return x;
}

SampledVerdict inclusion_plus_minus(const Point& zeta0, double eps,
                                    std::size_t samples, std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("inclusion_plus_minus: eps outside (0, 1)");
  std::mt19937_64 rng(seed);
  SampledVerdict v{true, 0, 0.0, std::nullopt};
  while (v.samples_checked < samples) {
    Point x = sample_ball(rng, zeta0, eps);
    if (norm(x) <= 1.0) continue;  // want B_+ only
    ++v.samples_checked;
    const Point y = inversion(x);
    const double dm = dist(y, zeta0);
    v.worst_value = std::max(v.worst_value, dm - dist(x, zeta0));
    if (!(dm < eps && norm(y) < 1.0)) {
      v.pass = false;
      v.counterexample = x;
      return v;
    }
  }
  return v;
}

SampledVerdict lower_norm_bound(const Point& zeta0, double r,
                                std::size_t samples, std::uint64_t seed) {
  if (!(r > 0.0 && r < 0.5))
    throw std::invalid_argument("lower_norm_bound: r outside (0, 1/2)");
  std::mt19937_64 rng(seed);
  SampledVerdict v{true, 0, std::numeric_limits<double>::infinity(),
                   std::nullopt};
  while (v.samples_checked < samples) {
    Point y = sample_ball(rng, zeta0, r);
    if (norm(y) >= 1.0) continue;  // want the inside part
    ++v.samples_checked;
    const double ny = norm(y);
    v.worst_value = std::min(v.worst_value, ny);
    if (ny < 0.5) {
      v.pass = false;
      v.counterexample = y;
      return v;
    }
  }
  return v;
}

}  // namespace gft
