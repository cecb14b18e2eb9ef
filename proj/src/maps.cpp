#include "gft/maps.hpp"

#include <cmath>
#include <stdexcept>

namespace gft {

Mat numeric_jacobian(const DifferentiableMap& f, const Point& x, double h) {
  const int n = f.n;
  for (int attempt = 0; attempt < 5; ++attempt) {
    Mat J = Mat::zero(n);
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      Point xp = x, xm = x;
      xp[static_cast<std::size_t>(j)] += h;
      xm[static_cast<std::size_t>(j)] -= h;
      Point fp, fm;
      try {
        fp = f.eval(xp);
        fm = f.eval(xm);
      } catch (const std::exception&) {
        ok = false;
        break;
      }
      for (int i = 0; i < n; ++i) {
        const double d =
            (fp[static_cast<std::size_t>(i)] - fm[static_cast<std::size_t>(i)]) / (2.0 * h);
        if (!std::isfinite(d)) {
          ok = false;
          break;
        }
        J(i, j) = d;
      }
    }
    if (ok) return J;
    h *= 0.5;
  }
  throw std::domain_error("numeric_jacobian: stencil leaves domain");
}

Point radial_map_eval(const RadialStretchMap& m, const Point& x) {
  const double r = norm(x);
  if (r == 0.0) return Point(static_cast<std::size_t>(m.dim), 0.0);
  if (r > 1.0 + 1e-12)
    throw std::domain_error("radial_map_eval: |x| > 1");
  const double s = std::exp(integrate_beta_over_t(m.profile, std::min(r, 1.0)));
  return (s / r) * x;
}

RadialDilatations radial_dilatations(const RadialStretchMap& m,
                                     const Point& x) {
  const double r = norm(x);
  if (!(r > 0.0 && r < 1.0))
    throw std::domain_error("radial_dilatations: need 0 < |x| < 1");
  RadialDilatations d;
  const double s = std::exp(integrate_beta_over_t(m.profile, r));
  const double beta = beta_eval(m.profile, r);
  d.delta_tau = s / r;
  d.delta_r = d.delta_tau * beta;
  d.op_norm = std::max(d.delta_tau, d.delta_r);
  d.K_I = beta;
  d.at_breakpoint = false;
  for (const StepProfile::Piece& q : m.profile.pieces)
    if (r == q.lo || r == q.hi) d.at_breakpoint = true;
  return d;
}

DifferentiableMap as_map(const RadialStretchMap& m) {
  RadialStretchMap copy = m;
  return {m.dim, "radial_stretch",
          [copy](const Point& x) { return radial_map_eval(copy, x); },
          nullptr};
}

DifferentiableMap power_map(double K) {
  if (!(K >= 1.0)) throw std::invalid_argument("power_map: K >= 1");
  const double p = 1.0 / K - 1.0;  // f(x) = |x|^p x
  auto eval = [p](const Point& x) {
    const double r = norm(x);
    if (r == 0.0) return Point{0.0, 0.0};
    return std::pow(r, p) * x;
  };
  auto jac = [p](const Point& x) {
    const double r = norm(x);
    if (r == 0.0) throw std::domain_error("power_map jacobian at 0");
    const double g = std::pow(r, p);
    const double gp = p * std::pow(r, p - 2.0);  // g'(r)/r
    Mat J = Mat::zero(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        J(i, j) = (i == j ? g : 0.0) +
                  gp * x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
    return J;
  };
  return {2, "power_map", eval, jac};
}

DifferentiableMap inversion_extension(const DifferentiableMap& f) {
  DifferentiableMap inner = f;
  auto eval = [inner](const Point& x) {
    const double r = norm(x);
    if (r == 0.0) throw std::domain_error("inversion_extension: x = 0");
    if (r <= 1.0) return inner.eval(x);
    const Point y = inner.eval(inversion(x));
    if (norm(y) == 0.0)
      throw std::domain_error("inversion_extension: f(psi(x)) = 0");
    return inversion(y);
  };
  return {f.n, f.label + "_extended", eval, nullptr};
}

}  // namespace gft
