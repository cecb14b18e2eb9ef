#ifndef GFT_QUADRATURE_HPP
#define GFT_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "gft/geometry.hpp"

namespace gft {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute
  long evaluations = 0;
  bool converged = true;
};

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 2000;
  double tail_cutoff = 1e12;  // upper reach for improper integrals
};

using Fn1 = std::function<double(double)>;

// Adaptive Gauss-Kronrod (G7/K15) with interval bisection.  Optional
// breakpoints force subdivision boundaries (for piecewise integrands).
QuadratureResult integrate_1d(const Fn1& f, double a, double b,
                              const QuadratureConfig& cfg = {},
                              const std::vector<double>& breakpoints = {});

enum class TailVerdict { Converged, Divergent, Inconclusive };

struct TailResult {
  TailVerdict verdict;
  QuadratureResult estimate;  // meaningful when Converged
};

// Improper integral over [a, infinity) by dyadic blocks [2^k a, 2^{k+1} a];
// converged when block sums contract geometrically (ratio < 0.9 for 3
// consecutive blocks), with a geometric-series tail correction.
TailResult integrate_tail(const Fn1& f, double a,
                          const QuadratureConfig& cfg = {});

// --- sphere rules -----------------------------------------------------------

struct SphereNode {
  Point x;       // unit vector
  double w;      // weight in unnormalized surface measure
};

using SphereRule = std::vector<SphereNode>;

// Product rule on S^{n-1}: Gauss-Legendre in cos(theta) x uniform longitude
// (n = 3), uniform angles (n = 2).  Weights sum to omega_{n-1}.
SphereRule make_sphere_rule(int n, int order_theta = 64, int order_phi = 128);

// Product rule with the polar axis moved to `axis` and the theta grid
// refined geometrically toward the pole down to scale `delta`; used for
// integrands peaking in a cap of angular width ~delta around `axis`.
SphereRule make_sphere_rule_refined(const Point& axis, double delta,
                                    int order_per_panel = 24,
                                    int order_phi = 64);

// Rule on the polar cap {<x, axis> >= cos(gamma)} of S^{n-1}.
SphereRule make_cap_rule(const Point& axis, double gamma,
                         int order_theta = 24, int order_phi = 48);

// Int_{S^{n-1}} g dH^{n-1} (unnormalized).
QuadratureResult integrate_sphere(const std::function<double(const Point&)>& g,
                                  int n, const QuadratureConfig& cfg = {});
QuadratureResult integrate_sphere(const std::function<double(const Point&)>& g,
                                  const SphereRule& rule);

// Int_region g dm via radial slicing: shells about the region center for
// Ball/Annulus, shells about the origin (with closed-form cap angles) for the
// intersection kinds.  `radial_breakpoints` are radii (about the slicing
// center) where the integrand jumps.
QuadratureResult integrate_ball(const std::function<double(const Point&)>& g,
                                int n, const BallRegion& region,
                                const QuadratureConfig& cfg = {},
                                const std::vector<double>& radial_breakpoints = {});

// Gauss-Legendre nodes/weights on [-1, 1]; cached per order.
void gauss_legendre(int order, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace gft

#endif
