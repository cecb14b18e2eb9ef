#include "gft/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace gft {

double QField::eval(const Point& x) const {
  if (norm(x) > 1.0) return 0.0;
  return base(x);
}

double QField::eval_reflected(const Point& x) const {
  const double r = norm(x);
  if (r <= 1.0) return base(x);
  return base(inversion(x));
}

QField QField::constant(int n, double c) {
  if (c < 0.0) throw std::invalid_argument("QField::constant: c >= 0");
  return {n, [c](const Point&) { return c; }, [c](double) { return c; }, {}};
}

QField QField::from_profile(int n, StepProfile profile) {
  auto radial = [profile](double r) {
    if (r <= 0.0) return 1.0;
    return beta_eval(profile, std::min(r, 1.0));
  };
  return {n, [radial](const Point& x) { return radial(norm(x)); }, radial,
          profile_breakpoints(profile)};
}

namespace {

// Angular measure (on the unit sphere of directions) of the slice of
// `region` at distance r from the origin.
double slice_angle(const BallRegion& region, double r, int n) {
  const double d = norm(region.center);
  const double eps = region.r_outer;
  if (d <= 1e-14) {
    const bool in = r > region.r_inner && r < eps;
    return in ? constants_n(n).omega : 0.0;
  }
  double a = cap_area(sphere_cap_angle(r, d, eps), n);
  if (region.kind == RegionKind::Annulus && region.r_inner > 0.0)
    a -= cap_area(sphere_cap_angle(r, d, region.r_inner), n);
  return a;
}

void slice_range(const BallRegion& region, double* rlo, double* rhi) {
  const double d = norm(region.center);
  const double eps = region.r_outer;
  *rlo = std::max(0.0, d - eps);
  *rhi = d + eps;
  switch (region.kind) {
    case RegionKind::BallCapPlus:
      *rlo = std::max(*rlo, 1.0);
      break;
    case RegionKind::BallCapMinus:
    case RegionKind::BallIntersectUnitBall:
      *rhi = std::min(*rhi, 1.0);
      break;
    default:
      break;
  }
}

double radial_value(const QField& Q, double r, bool reflected) {
  if (r <= 1.0) return Q.radial(r);
  return reflected ? Q.radial(1.0 / r) : 0.0;
}

}  // namespace

double integrate_q(const QField& Q, const BallRegion& region, bool reflected,
                   const QuadratureConfig& cfg) {
  const int n = Q.n;
  if (Q.radial) {
    double rlo, rhi;
    slice_range(region, &rlo, &rhi);
    if (!(rlo < rhi)) return 0.0;
    std::vector<double> bps;
    for (double b : Q.radial_breakpoints) {
      if (b > rlo && b < rhi) bps.push_back(b);
      if (reflected) {
        const double br = 1.0 / b;
        if (br > rlo && br < rhi) bps.push_back(br);
      }
    }
    const double d = norm(region.center);
    for (double g : {1.0, d, d - region.r_inner, d + region.r_inner})
      if (g > rlo && g < rhi) bps.push_back(g);
    auto f = [&](double r) {
      return radial_value(Q, r, reflected) * std::pow(r, n - 1) *
             slice_angle(region, r, n);
    };
    return integrate_1d(f, rlo, rhi, cfg, bps).value;
  }
  auto g = [&](const Point& x) {
    return reflected ? Q.eval_reflected(x) : Q.eval(x);
  };
  return integrate_ball(g, n, region, cfg).value;
}

double ball_mean(const QField& Q, const Point& zeta, double eps,
                 const QuadratureConfig& cfg) {
  if (!(eps > 0.0)) throw std::invalid_argument("ball_mean: eps > 0");
  const BallRegion region = on_unit_sphere(zeta)
                                ? BallRegion::cap_minus(zeta, eps)
                                : BallRegion::intersect_unit_ball(zeta, eps);
  const ConstantsN cn = constants_n(Q.n);
  return integrate_q(Q, region, false, cfg) /
         (cn.Omega * std::pow(eps, Q.n));
}

SupMean sup_ball_mean(const QField& Q, const Point& zeta, double eps0,
                      int grid, double eps_min, const QuadratureConfig& cfg) {
  if (!(eps_min > 0.0 && eps_min < eps0))
    throw std::invalid_argument("sup_ball_mean: need 0 < eps_min < eps0");
  SupMean best{-1.0, eps_min};
  for (int i = 0; i < grid; ++i) {
    const double eps =
        eps_min * std::pow(eps0 / eps_min, grid == 1 ? 0.0 : double(i) / (grid - 1));
    const double v = ball_mean(Q, zeta, eps, cfg);
    if (v > best.value) best = {v, eps};
  }
  return best;
}

double spherical_mean(const QField& Q, const Point& x0, double r,
                      bool reflected, const QuadratureConfig& cfg) {
  (void)cfg;
  if (!(r > 0.0)) throw std::invalid_argument("spherical_mean: r > 0");
  if (Q.radial && norm(x0) <= 1e-14) return radial_value(Q, r, reflected);
  const SphereRule rule = make_sphere_rule(Q.n, 64, 128);
  const double omega = constants_n(Q.n).omega;
  double s = 0.0;
  for (const SphereNode& node : rule) {
    const Point x = x0 + r * node.x;
    s += node.w * (reflected ? Q.eval_reflected(x) : Q.eval(x));
  }
  return s / omega;
}

LimsupResult limsup_condition(const QField& Q, const Point& x0, double alpha,
                              double eps0, double t_floor,
                              const QuadratureConfig& cfg) {
  if (!(eps0 > 0.0 && eps0 < 0.5))
    throw std::invalid_argument("limsup_condition: need 0 < eps0 < 1/2");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("limsup_condition: alpha in (0, 1]");
  const double p = 1.0 / (Q.n - 1);
  auto integrand = [&](double r) {
    const double q = spherical_mean(Q, x0, r, true, cfg);
    // q = 0 makes the condition trivially satisfied there
    const double qterm = q > 0.0 ? std::pow(q, -p) : 1e6;
    return (alpha - qterm) / r;
  };
  const double decades = std::log10(eps0 / t_floor);
  const int npts = std::max(2, static_cast<int>(std::ceil(40.0 * decades)));
  LimsupResult res{0.0, LimsupVerdict::Bounded, {}};
  res.sweep.reserve(static_cast<std::size_t>(npts) + 1);
  res.sweep.emplace_back(eps0, 0.0);
  double acc = 0.0;
  double t_prev = eps0;
  std::vector<double> at_decade{0.0};
  for (int j = 1; j <= npts; ++j) {
    const double t = eps0 * std::pow(10.0, -decades * j / npts);
    std::vector<double> bps;
    for (double b : Q.radial_breakpoints)
      if (b > t && b < t_prev) bps.push_back(b);
    acc += integrate_1d(integrand, t, t_prev, cfg, bps).value;
    res.sweep.emplace_back(t, acc);
    res.bound_estimate = std::max(res.bound_estimate, acc);
    const double dec = std::log10(eps0 / t);
    if (dec >= double(at_decade.size()) - 1e-9) at_decade.push_back(acc);
    t_prev = t;
  }
  if (at_decade.size() >= 2) {
    std::vector<double> inc;
    for (std::size_t m = 0; m + 1 < at_decade.size(); ++m)
      inc.push_back(at_decade[m + 1] - at_decade[m]);
    const double d_last = inc.back();
    double d_max = 0.0;
    for (double d : inc) d_max = std::max(d_max, d);
    // sustained positive per-decade growth means the limsup diverges
    if ((res.bound_estimate > 50.0 && d_last > 0.0) ||
        (d_last > 1e-2 && d_last > 0.5 * d_max))
      res.verdict = LimsupVerdict::Unbounded;
  }
  return res;
}

ReflectionBound reflection_factor_bound(const QField& Q, const Point& zeta0,
                                        double r,
                                        const QuadratureConfig& cfg) {
  if (!(r > 0.0 && r < 0.5))
    throw std::invalid_argument("reflection_factor_bound: 0 < r < 1/2");
  const double inside =
      integrate_q(Q, BallRegion::cap_minus(zeta0, r), false, cfg);
  const double outside =
      integrate_q(Q, BallRegion::cap_plus(zeta0, r), true, cfg);
  ReflectionBound b;
  b.lhs = inside + outside;
  b.rhs = (std::pow(4.0, Q.n) + 1.0) * inside;
  b.pass = b.lhs <= b.rhs * (1.0 + 1e-6);
  return b;
}

double annulus_log_bound(const QField& Q, const Point& x0, double eps,
                         double eps0, const QuadratureConfig& cfg) {
  if (!(eps > 0.0 && eps < eps0))
    throw std::invalid_argument("annulus_log_bound: 0 < eps < eps0");
  const SphereRule rule = Q.n == 3 ? make_sphere_rule(3, 32, 64)
                                   : make_sphere_rule(2, 0, 256);
  // substitute u = log rho: Int Q*/|x-x0|^n dm = Int shell(e^u) du
  auto f = [&](double u) {
    const double rho = std::exp(u);
    double s = 0.0;
    for (const SphereNode& node : rule)
      s += node.w * Q.eval_reflected(x0 + rho * node.x);
    return s;
  };
  QuadratureConfig loose = cfg;
  loose.abs_tol = std::max(cfg.abs_tol, 1e-6);
  loose.rel_tol = std::max(cfg.rel_tol, 1e-6);
  const double integral =
      integrate_1d(f, std::log(eps), std::log(eps0), loose).value;
  return integral / std::log(1.0 / eps);
}

double holder_exponent_theorem1(double C, int n) {
  if (!(C > 0.0)) throw std::invalid_argument("holder_exponent_theorem1: C > 0");
  if (n < 3) throw std::invalid_argument("holder_exponent_theorem1: n >= 3");
  const ConstantsN cn = constants_n(n);
  const double base = cn.omega * std::log(2.0) /
                      (cn.Omega * (std::pow(4.0, n) + 1.0) *
                       std::pow(2.0, n + 1) * C);
  return std::pow(base, 1.0 / (n - 1));
}

HolderEstimate empirical_holder(const DifferentiableMap& f,
                                const Point& center, double alpha,
                                double radius, std::size_t pairs,
                                std::uint64_t seed, double domain_radius,
                                double r_min) {
  if (pairs < 100) throw std::invalid_argument("empirical_holder: pairs >= 100");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const Point fc = f.eval(center);
  double cmax = 0.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t used = 0;
  while (used < pairs) {
    Point dir(static_cast<std::size_t>(f.n));
    for (double& c : dir) c = gauss(rng);
    if (norm(dir) < 1e-8) continue;
    dir = normalized(dir);
    const double rho = r_min * std::pow(radius / r_min, unif(rng));
    const Point x = center + rho * dir;
    if (norm(x) > domain_radius) continue;
    const double df = dist(f.eval(x), fc);
    if (df <= 0.0) continue;
    ++used;
    cmax = std::max(cmax, df / std::pow(rho, alpha));
    const double lx = std::log(rho), ly = std::log(df);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double m = static_cast<double>(used);
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return {cmax, slope};
}

}  // namespace gft
