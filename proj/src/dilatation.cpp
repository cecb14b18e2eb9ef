#include "gft/dilatation.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace gft {

DistortionSample distortion_from_jacobian(const Mat& M, const Point& x) {
  for (int i = 0; i < M.n; ++i)
    for (int j = 0; j < M.n; ++j)
      if (std::isnan(M(i, j)))
        throw std::invalid_argument("distortion_from_jacobian: NaN entry");
  DistortionSample s;
  s.point = x;
  s.J = det(M);
  const std::vector<double> sv = singular_values(M);
  s.op_norm = sv.front();
  s.l = sv.back();
  s.orientation_reversing = s.J < 0.0;
  const double aJ = std::abs(s.J);
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (s.op_norm == 0.0) {
    s.K_I = 1.0;  // zero derivative convention
    s.K_O = 1.0;
  } else if (aJ == 0.0) {
    s.K_I = inf;
    s.K_O = inf;
  } else {
    s.K_I = aJ / std::pow(s.l, M.n);
    s.K_O = std::pow(s.op_norm, M.n) / aJ;
  }
  return s;
}

std::vector<DistortionSample> k_i_field(const DifferentiableMap& f,
                                        const std::vector<Point>& points,
                                        double h) {
  std::vector<DistortionSample> out;
  out.reserve(points.size());
  for (const Point& x : points) {
    try {
      const Mat J = f.analytic_jacobian
                        ? f.analytic_jacobian(x)
                        : numeric_jacobian(f, x, h > 0.0 ? h : fd_step(x));
      out.push_back(distortion_from_jacobian(J, x));
    } catch (const std::exception&) {
      DistortionSample bad;
      bad.point = x;
      bad.valid = false;
      out.push_back(bad);
    }
  }
  return out;
}

InvarianceResult conformal_invariance_check(
    const DifferentiableMap& f, std::size_t samples, std::uint64_t seed,
    const std::vector<double>& radial_guard) {
  constexpr double kGuard = 1e-4;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.55, 0.95);
  const DifferentiableMap F = inversion_extension(f);
  InvarianceResult res{0.0, 0};
  while (res.samples < samples) {
    double r_in = unif(rng);
    bool near_jump = false;
    for (double b : radial_guard)
      if (std::abs(r_in - b) < kGuard) near_jump = true;
    if (near_jump) continue;
    Point dir(static_cast<std::size_t>(f.n));
    for (double& c : dir) c = gauss(rng);
    if (norm(dir) < 1e-8) continue;
    dir = normalized(dir);
    const Point y = r_in * dir;            // inside, away from jumps
    const Point x = inversion(y);          // |x| = 1/r_in in (1.05, 1.82)
    const double h = 1e-6;
    const DistortionSample inside =
        distortion_from_jacobian(numeric_jacobian(f, y, h), y);
    const DistortionSample outside =
        distortion_from_jacobian(numeric_jacobian(F, x, h), x);
    ++res.samples;
    res.max_rel_dev = std::max(
        res.max_rel_dev, std::abs(outside.K_I - inside.K_I) / inside.K_I);
  }
  return res;
}

}  // namespace gft
