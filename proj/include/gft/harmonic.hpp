#ifndef GFT_HARMONIC_HPP
#define GFT_HARMONIC_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "gft/quadrature.hpp"

namespace gft {

struct BoundaryData {
  std::function<double(const Point&)> g;  // on S^{n-1}
  std::string label;
  double alpha = 0.0;  // Holder modulus at x0, when marked
  double M = 0.0;
  Point x0;
};

// P(x, eta) = (1 - |x|^2) / |x - eta|^n, normalized so that the mean over
// eta (with respect to normalized surface measure) is 1.
double poisson_kernel(const Point& x, const Point& eta);

// h(x) = Int P(x, eta) g(eta) dsigma(eta); near-boundary x get a rule
// refined toward the direction of x.
double poisson_extend(const BoundaryData& g, const Point& x,
                      const QuadratureConfig& cfg = {});

// Differentiation under the integral, with the zero-mean stabilization
// Int grad_x P dsigma = 0 (the constant g(x/|x|) is subtracted).
Point poisson_gradient(const BoundaryData& g, const Point& x,
                       const QuadratureConfig& cfg = {});

// Int_{S^{n-1}} f dH for zonal f (depending only on the polar angle):
// c_n Int_0^pi g(phi) sin^{n-2}(phi) dphi with c_n fixed by 1 -> omega_{n-1}.
// normalized divides by omega_{n-1}.
double zonal_integral(const std::function<double(double)>& g, int n,
                      bool normalized, const QuadratureConfig& cfg = {});

// I_alpha(r e_n) = Int |e_n - t|^alpha / |r e_n - t|^n dsigma(t); behaves
// like (1 - r)^{alpha - 1} as r -> 1.
double i_alpha(double r, double alpha, int n,
               const QuadratureConfig& cfg = {});

struct PrivalovResult {
  double sup_scaled;  // sup of (1-r)^{1-alpha} |grad h(r x0)|
  double slope;       // log-log slope of |grad h| vs (1-r); expect alpha - 1
  std::vector<std::array<double, 3>> table;  // (r, |grad h|, scaled)
};

PrivalovResult privalov_check(const BoundaryData& g,
                              const std::vector<double>& r_grid,
                              const QuadratureConfig& cfg = {});

}  // namespace gft

#endif
