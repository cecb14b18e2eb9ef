#include "gft/harmonic.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace gft {

double poisson_kernel(const Point& x, const Point& eta) {
  const double r2 = norm_sq(x);
  if (r2 >= 1.0) throw std::domain_error("poisson_kernel: |x| >= 1");
  const int n = static_cast<int>(x.size());
  const double s = dist(x, eta);
  return (1.0 - r2) / std::pow(s, n);
}

namespace {

SphereRule rule_for(const Point& x) {
  const int n = static_cast<int>(x.size());
  const double r = norm(x);
  if (r > 0.75) {
    // kernel peaks in a cap of angular width ~ (1 - r) about x
    return make_sphere_rule_refined(normalized(x), 1.0 - r, 24,
                                    n == 3 ? 64 : 0);
  }
  return n == 3 ? make_sphere_rule(3, 64, 128) : make_sphere_rule(2, 0, 512);
}

}  // namespace

double poisson_extend(const BoundaryData& g, const Point& x,
                      const QuadratureConfig& cfg) {
  (void)cfg;
  const int n = static_cast<int>(x.size());
  const double omega = constants_n(n).omega;
  const SphereRule rule = rule_for(x);
  double s = 0.0;
  for (const SphereNode& node : rule)
    s += node.w * poisson_kernel(x, node.x) * g.g(node.x);
  return s / omega;
}

Point poisson_gradient(const BoundaryData& g, const Point& x,
                       const QuadratureConfig& cfg) {
  (void)cfg;
  const int n = static_cast<int>(x.size());
  if (norm_sq(x) >= 1.0)
    throw std::domain_error("poisson_gradient: |x| >= 1");
  const double omega = constants_n(n).omega;
  const double d = 1.0 - norm_sq(x);
  const double gref = norm(x) > 1e-14 ? g.g(normalized(x)) : 0.0;
  const SphereRule rule = rule_for(x);
  Point grad(static_cast<std::size_t>(n), 0.0);
  for (const SphereNode& node : rule) {
    const double s = dist(x, node.x);
    const double sn = std::pow(s, n);
    const double gv = g.g(node.x) - gref;
    for (int k = 0; k < n; ++k) {
      const std::size_t ki = static_cast<std::size_t>(k);
      const double dPk = -2.0 * x[ki] / sn +
                         d * n * (node.x[ki] - x[ki]) / (sn * s * s);
      grad[ki] += node.w * dPk * gv;
    }
  }
  return (1.0 / omega) * grad;
}

double zonal_integral(const std::function<double(double)>& g, int n,
                      bool normalized, const QuadratureConfig& cfg) {
  const ConstantsN cn = constants_n(n);
  const double full = std::sqrt(M_PI) * std::tgamma(0.5 * (n - 1)) /
                      std::tgamma(0.5 * n);  // Int_0^pi sin^{n-2}
  const double c = cn.omega / full;
  auto f = [&](double phi) { return g(phi) * std::pow(std::sin(phi), n - 2); };
  const double v = c * integrate_1d(f, 0.0, M_PI, cfg).value;
  return normalized ? v / cn.omega : v;
}

double i_alpha(double r, double alpha, int n, const QuadratureConfig& cfg) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("i_alpha: r in [0, 1)");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("i_alpha: alpha in (0, 1)");
  auto f = [&](double theta) {
    const double chord = 2.0 * std::sin(0.5 * theta);  // |e_n - t|
    const double s2 = 1.0 - 2.0 * r * std::cos(theta) + r * r;
    return std::pow(chord, alpha) / std::pow(s2, 0.5 * n);
  };
  // the integrand concentrates at theta ~ (1 - r); seed matching panels
  std::vector<double> bps;
  for (double t = 1.0 - r; t < M_PI; t *= 2.0) bps.push_back(t);
  const double full = std::sqrt(M_PI) * std::tgamma(0.5 * (n - 1)) /
                      std::tgamma(0.5 * n);
  auto zf = [&](double theta) {
    return f(theta) * std::pow(std::sin(theta), n - 2);
  };
  return integrate_1d(zf, 0.0, M_PI, cfg, bps).value / full;
}

PrivalovResult privalov_check(const BoundaryData& g,
                              const std::vector<double>& r_grid,
                              const QuadratureConfig& cfg) {
  if (!(g.alpha > 0.0 && g.alpha < 1.0))
    throw std::invalid_argument("privalov_check: alpha in (0, 1)");
  const Point axis = normalized(g.x0);
  PrivalovResult res{0.0, 0.0, {}};
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (double r : r_grid) {
    if (!(r >= 0.0 && r <= 0.999)) continue;  // quadrature floor
    const Point grad = poisson_gradient(g, r * axis, cfg);
    const double gn = norm(grad);
    const double scaled = std::pow(1.0 - r, 1.0 - g.alpha) * gn;
    res.table.push_back({r, gn, scaled});
    res.sup_scaled = std::max(res.sup_scaled, scaled);
    if (r > 0.0 && gn > 0.0) {
      const double lx = std::log(1.0 - r), ly = std::log(gn);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
  }
  const double m = static_cast<double>(res.table.size());
  if (m >= 2.0) res.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return res;
}

}  // namespace gft
