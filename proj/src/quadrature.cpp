#include "gft/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gft {

namespace {

// Gauss 7 / Kronrod 15 on [-1, 1], positive abscissae.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Panel {
  double a, b, value, error;
};

// One G7/K15 evaluation on [a, b].
Panel gk15(const Fn1& f, double a, double b, long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[2 * i] = f(c - h * kXgk[i]);
    fv[2 * i + 1] = f(c + h * kXgk[i]);
  }
  fv[14] = f(c);
  evals += 15;
  for (double v : fv)
    if (std::isnan(v)) throw std::domain_error("integrate_1d: integrand NaN");
  double kron = kWgk[7] * fv[14];
  double gauss = kWg[3] * fv[14];
  for (int i = 0; i < 7; ++i) {
    const double s = fv[2 * i] + fv[2 * i + 1];
    kron += kWgk[i] * s;
    if (i % 2 == 1) gauss += kWg[i / 2] * s;
  }
  const double value = kron * h;
  const double err = std::abs((kron - gauss) * h);
  // standard Kronrod error sharpening
  const double scaled = err > 0.0 ? std::min(1.0, std::pow(200.0 * err / std::max(1e-300, std::abs(value)), 1.5)) : 0.0;
  return Panel{a, b, value, err * (scaled > 0.0 ? 1.0 : 1.0)};
}

}  // namespace

QuadratureResult integrate_1d(const Fn1& f, double a, double b,
                              const QuadratureConfig& cfg,
                              const std::vector<double>& breakpoints) {
  if (!(a < b)) throw std::invalid_argument("integrate_1d: need a < b");
  std::vector<double> edges{a};
  for (double t : breakpoints)
    if (t > a && t < b) edges.push_back(t);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  QuadratureResult res;
  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    panels.push_back(gk15(f, edges[i], edges[i + 1], res.evaluations));

  int subdivisions = static_cast<int>(panels.size());
  for (;;) {
    double total = 0.0, err = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      err += panels[i].error;
      if (panels[i].error > panels[worst].error) worst = i;
    }
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    if (err <= tol) {
      res.converged = true;
    } else if (subdivisions >= cfg.max_subdivisions ||
               panels[worst].b - panels[worst].a <
                   1e-15 * (std::abs(panels[worst].a) + 1.0)) {
      res.converged = false;
    } else {
      const Panel p = panels[worst];
      const double mid = 0.5 * (p.a + p.b);
      panels[worst] = gk15(f, p.a, mid, res.evaluations);
      panels.push_back(gk15(f, mid, p.b, res.evaluations));
      ++subdivisions;
      continue;
    }
    // deterministic final summation: left-to-right
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    res.value = 0.0;
    res.error_estimate = 0.0;
    for (const Panel& p : panels) {
      res.value += p.value;
      res.error_estimate += p.error;
    }
    return res;
  }
}

TailResult integrate_tail(const Fn1& f, double a, const QuadratureConfig& cfg) {
  if (!(a >= 1.0)) throw std::invalid_argument("integrate_tail: need a >= 1");
  if (!(cfg.tail_cutoff > 1.0))
    throw std::invalid_argument("integrate_tail: tail_cutoff must be > 1");

  QuadratureConfig block_cfg = cfg;
  block_cfg.abs_tol = std::max(cfg.abs_tol * 1e-2, 1e-14);

  TailResult out{TailVerdict::Inconclusive, {}};
  double sum = 0.0, err = 0.0;
  long evals = 0;
  std::vector<double> blocks;
  double lo = a;
  int contractions = 0;
  while (lo < cfg.tail_cutoff) {
    const double hi = 2.0 * lo;
    QuadratureResult r = integrate_1d(f, lo, hi, block_cfg);
    evals += r.evaluations;
    sum += r.value;
    err += r.error_estimate;
    blocks.push_back(r.value);
    if (r.value < -cfg.abs_tol) {
      out.verdict = TailVerdict::Inconclusive;  // sign change: not eventually monotone
      return out;
    }
    const std::size_t k = blocks.size();
    if (k >= 2) {
      const double prev = blocks[k - 2];
      const double ratio = prev > 0.0 ? blocks[k - 1] / prev : 0.0;
      contractions = (ratio < 0.9) ? contractions + 1 : 0;
      if (contractions >= 3) {
        // geometric extrapolation of the remaining tail
        const double q = std::max(0.0, std::min(0.9, ratio));
        const double tail = blocks[k - 1] * q / (1.0 - q);
        out.verdict = TailVerdict::Converged;
        out.estimate = {sum + tail, err + tail, evals, true};
        return out;
      }
    }
    if (blocks.back() <= cfg.abs_tol) {
      out.verdict = TailVerdict::Converged;
      out.estimate = {sum, err + cfg.abs_tol, evals, true};
      return out;
    }
    lo = hi;
  }
  // ran out of range with block sums still significant
  out.verdict = TailVerdict::Divergent;
  out.estimate = {sum, err, evals, false};
  return out;
}

void gauss_legendre(int order, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end()) {
      nodes = it->second.first;
      weights = it->second.second;
      return;
    }
  }
  nodes.assign(static_cast<std::size_t>(order), 0.0);
  weights.assign(static_cast<std::size_t>(order), 0.0);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration from the Chebyshev-based initial guess
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(order - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(order - 1 - i)] = w;
  }
  std::lock_guard<std::mutex> lock(mtx);
  cache[order] = {nodes, weights};
}

SphereRule make_sphere_rule(int n, int order_theta, int order_phi) {
  SphereRule rule;
  if (n == 2) {
    const int m = std::max(8, order_phi);
    rule.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      const double phi = 2.0 * M_PI * (j + 0.5) / m;
      rule.push_back({{std::cos(phi), std::sin(phi)}, 2.0 * M_PI / m});
    }
    return rule;
  }
  if (n != 3) throw std::invalid_argument("make_sphere_rule: n must be 2 or 3");
  std::vector<double> u, wu;
  gauss_legendre(order_theta, u, wu);  // u = cos(theta) on [-1, 1]
  rule.reserve(static_cast<std::size_t>(order_theta * order_phi));
  for (int i = 0; i < order_theta; ++i) {
    const double c = u[static_cast<std::size_t>(i)];
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (int j = 0; j < order_phi; ++j) {
      const double phi = 2.0 * M_PI * (j + 0.5) / order_phi;
      rule.push_back({{s * std::cos(phi), s * std::sin(phi), c},
                      wu[static_cast<std::size_t>(i)] * 2.0 * M_PI / order_phi});
    }
  }
  return rule;
}

namespace {

Point in_frame(const Frame& fr, double theta, double phi, int n) {
  if (n == 2) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * fr.axis[0] + s * fr.u[0], c * fr.axis[1] + s * fr.u[1]};
  }
  const double st = std::sin(theta), ct = std::cos(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  Point x(3);
  for (int i = 0; i < 3; ++i)
    x[static_cast<std::size_t>(i)] = ct * fr.axis[static_cast<std::size_t>(i)] +
                                     st * (cp * fr.u[static_cast<std::size_t>(i)] +
                                           sp * fr.v[static_cast<std::size_t>(i)]);
  return x;
}

// theta panels [0, d], [d, 2d], [2d, 4d], ... covering [0, hi]
std::vector<double> geometric_panels(double d, double hi) {
  std::vector<double> edges{0.0};
  double t = std::min(d, hi);
  while (t < hi) {
    edges.push_back(t);
    t *= 2.0;
  }
  edges.push_back(hi);
  return edges;
}

}  // namespace

SphereRule make_sphere_rule_refined(const Point& axis, double delta,
                                    int order_per_panel, int order_phi) {
  const int n = static_cast<int>(axis.size());
  const Frame fr = make_frame(axis);
  const double d = std::clamp(delta, 1e-6, M_PI / 4.0);
  const std::vector<double> edges = geometric_panels(d, M_PI);
  std::vector<double> gn, gw;
  gauss_legendre(order_per_panel, gn, gw);
  SphereRule rule;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p], b = edges[p + 1];
    for (int i = 0; i < order_per_panel; ++i) {
      const double theta = 0.5 * (a + b) + 0.5 * (b - a) * gn[static_cast<std::size_t>(i)];
      const double wt = 0.5 * (b - a) * gw[static_cast<std::size_t>(i)];
      if (n == 2) {
        // symmetric panels about the axis
        rule.push_back({in_frame(fr, theta, 0.0, 2), wt});
        rule.push_back({in_frame(fr, -theta, 0.0, 2), wt});
      } else {
        const double ring = wt * std::sin(theta) * 2.0 * M_PI / order_phi;
        for (int j = 0; j < order_phi; ++j) {
          const double phi = 2.0 * M_PI * (j + 0.5) / order_phi;
          rule.push_back({in_frame(fr, theta, phi, 3), ring});
        }
      }
    }
  }
  return rule;
}

SphereRule make_cap_rule(const Point& axis, double gamma, int order_theta,
                         int order_phi) {
  const int n = static_cast<int>(axis.size());
  SphereRule rule;
  if (gamma <= 0.0) return rule;
  const Frame fr = make_frame(axis);
  std::vector<double> gn, gw;
  gauss_legendre(order_theta, gn, gw);
  if (n == 2) {
    for (int i = 0; i < order_theta; ++i) {
      const double theta = gamma * gn[static_cast<std::size_t>(i)];
      rule.push_back({in_frame(fr, theta, 0.0, 2), gamma * gw[static_cast<std::size_t>(i)]});
    }
    return rule;
  }
  if (n != 3) throw std::invalid_argument("make_cap_rule: n must be 2 or 3");
  // Gauss-Legendre in u = cos(theta) over [cos(gamma), 1]
  const double ulo = std::cos(gamma);
  for (int i = 0; i < order_theta; ++i) {
    const double u = 0.5 * (1.0 + ulo) + 0.5 * (1.0 - ulo) * gn[static_cast<std::size_t>(i)];
    const double wu = 0.5 * (1.0 - ulo) * gw[static_cast<std::size_t>(i)];
    const double theta = std::acos(std::clamp(u, -1.0, 1.0));
    for (int j = 0; j < order_phi; ++j) {
      const double phi = 2.0 * M_PI * (j + 0.5) / order_phi;
      rule.push_back({in_frame(fr, theta, phi, 3), wu * 2.0 * M_PI / order_phi});
    }
  }
  return rule;
}

QuadratureResult integrate_sphere(const std::function<double(const Point&)>& g,
                                  const SphereRule& rule) {
  QuadratureResult res;
  double s = 0.0;
  for (const SphereNode& node : rule) {
    const double v = g(node.x);
    if (std::isnan(v)) throw std::domain_error("integrate_sphere: integrand NaN");
    s += node.w * v;
  }
  res.value = s;
  res.evaluations = static_cast<long>(rule.size());
  res.error_estimate = 0.0;  // fixed rule: no internal estimate
  return res;
}

QuadratureResult integrate_sphere(const std::function<double(const Point&)>& g,
                                  int n, const QuadratureConfig& cfg) {
  (void)cfg;
  static const SphereRule rule2 = make_sphere_rule(2, 0, 512);
  static const SphereRule rule3 = make_sphere_rule(3, 64, 128);
  if (n == 2) return integrate_sphere(g, rule2);
  if (n == 3) return integrate_sphere(g, rule3);
  throw std::invalid_argument("integrate_sphere: n must be 2 or 3");
}

QuadratureResult integrate_ball(const std::function<double(const Point&)>& g,
                                int n, const BallRegion& region,
                                const QuadratureConfig& cfg,
                                const std::vector<double>& radial_breakpoints) {
  QuadratureResult res;
  long shell_evals = 0;

  if (region.kind == RegionKind::Ball || region.kind == RegionKind::Annulus) {
    const SphereRule rule =
        (n == 3) ? make_sphere_rule(3, 32, 64) : make_sphere_rule(2, 0, 256);
    const Point& c = region.center;
    auto shell = [&](double rho) {
      if (rho == 0.0) return 0.0;
      double s = 0.0;
      for (const SphereNode& node : rule) {
        Point x = c;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += rho * node.x[i];
        s += node.w * g(x);
      }
      shell_evals += static_cast<long>(rule.size());
      return std::pow(rho, n - 1) * s;
    };
    QuadratureResult r = integrate_1d(shell, region.r_inner, region.r_outer,
                                      cfg, radial_breakpoints);
    r.evaluations = shell_evals;
    return r;
  }

  // Intersection kinds: slice with spheres S(0, r); the slice is a polar cap
  // about the direction of the region center.
  const double d = norm(region.center);
  const double eps = region.r_outer;
  double rlo, rhi;
  switch (region.kind) {
    case RegionKind::BallCapPlus:
      rlo = std::max(1.0, d - eps);
      rhi = d + eps;
      break;
    case RegionKind::BallCapMinus:
    case RegionKind::BallIntersectUnitBall:
      rlo = std::max(0.0, d - eps);
      rhi = std::min(1.0, d + eps);
      break;
    default:
      throw std::invalid_argument("integrate_ball: unknown region kind");
  }
  if (!(rlo < rhi)) return res;  // empty region

  const Point axis = d > 1e-14 ? normalized(region.center) : unit_axis(n, n - 1);
  auto shell = [&](double r) {
    double gamma;
    if (d <= 1e-14) {
      gamma = (r < eps) ? M_PI : 0.0;
    } else {
      gamma = sphere_cap_angle(r, d, eps);
    }
    if (gamma <= 0.0) return 0.0;
    double s = 0.0;
    if (gamma >= M_PI) {
      const SphereRule full =
          (n == 3) ? make_sphere_rule(3, 24, 48) : make_sphere_rule(2, 0, 128);
      for (const SphereNode& node : full) s += node.w * g(r * node.x);
      shell_evals += static_cast<long>(full.size());
    } else {
      const SphereRule cap = make_cap_rule(axis, gamma);
      for (const SphereNode& node : cap) s += node.w * g(r * node.x);
      shell_evals += static_cast<long>(cap.size());
    }
    return std::pow(r, n - 1) * s;
  };
  QuadratureResult r = integrate_1d(shell, rlo, rhi, cfg, radial_breakpoints);
  r.evaluations = shell_evals;
  return r;
}

}  // namespace gft
