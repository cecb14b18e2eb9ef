#ifndef GFT_MAPS_HPP
#define GFT_MAPS_HPP

#include <functional>
#include <string>

#include "gft/geometry.hpp"
#include "gft/linalg.hpp"
#include "gft/profiles.hpp"

namespace gft {

struct DifferentiableMap {
  int n;
  std::string label;
  std::function<Point(const Point&)> eval;
  std::function<Mat(const Point&)> analytic_jacobian;  // may be empty
};

// Central differences, entry (i,j) = (f_i(x + h e_j) - f_i(x - h e_j)) / 2h.
// Shrinks h up to 4 times if the stencil leaves the domain, then throws.
Mat numeric_jacobian(const DifferentiableMap& f, const Point& x, double h);

// Default finite-difference step at x.
inline double fd_step(const Point& x) { return 1e-5 * std::max(1.0, norm(x)); }

// f(x) = (x/|x|) exp(Int_1^{|x|} beta(t)/t dt), f(0) = 0.
struct RadialStretchMap {
  StepProfile profile;
  int dim;
};

Point radial_map_eval(const RadialStretchMap& m, const Point& x);

struct RadialDilatations {
  double delta_tau;  // |f(x)| / |x|
  double delta_r;    // d|f| / d|x| = delta_tau * beta(|x|)
  double op_norm;
  double K_I;        // = beta(|x|)
  bool at_breakpoint;
};

// Closed-form dilatations at 0 < |x| < 1; at a profile breakpoint the
// right-sided value is reported with at_breakpoint set.
RadialDilatations radial_dilatations(const RadialStretchMap& m, const Point& x);

DifferentiableMap as_map(const RadialStretchMap& m);

// Planar z |z|^{1/K - 1}; Holder exponent 1/K at 0.
DifferentiableMap power_map(double K);

// F = f on the closed unit ball, psi(f(psi(x))) outside; f must fix 0.
DifferentiableMap inversion_extension(const DifferentiableMap& f);

}  // namespace gft

#endif
