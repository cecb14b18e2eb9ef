#ifndef GFT_BELTRAMI_HPP
#define GFT_BELTRAMI_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "gft/quadrature.hpp"

namespace gft {

using cplx = std::complex<double>;

struct PlanarMap {
  std::function<cplx(cplx)> f;
  // analytic (f_z, f_zbar) when available
  std::function<std::pair<cplx, cplx>(cplx)> wirtinger_pair;
  std::string label;
};

// f_z = (f_x - i f_y)/2, f_zbar = (f_x + i f_y)/2 by central differences
// (or the analytic pair when present).
std::pair<cplx, cplx> wirtinger(const PlanarMap& f, cplx z, double h = 0.0);

struct ComplexDilatation {
  cplx mu;      // f_zbar / f_z
  cplx nu;      // mu * f_z / conj(f_z)
  double K_mu;  // (1 + |mu|) / (1 - |mu|)
};

ComplexDilatation complex_dilatation(const PlanarMap& f, cplx z,
                                     double h = 0.0);

// Max over sampled pairs in the disk B(center, radius) of
// |mu(z1) - mu(z2)| / |z1 - z2|^alpha.
double holder_modulus_of_mu(const PlanarMap& f, cplx center, double radius,
                            double alpha, std::size_t pairs,
                            std::uint64_t seed, double h = 0.0);

struct BiLipschitzEstimate {
  double l_est;
  double L_est;
};

BiLipschitzEstimate bilipschitz_estimate(const PlanarMap& f, cplx center,
                                         double radius, std::size_t pairs,
                                         std::uint64_t seed);

enum class GrowthVerdict { Finite, Divergent };

struct GrowthResult {
  GrowthVerdict verdict;
  double value;  // partial sum (plus tail extrapolation when Finite)
};

// Int_{B(z0, r0)} |chi(z) - chi0| / |z - z0|^2 dA by dyadic shells toward
// z0; the shell sums are re-grouped into dyadic blocks of shells so that
// harmonic-type decay (shell ~ 1/j) is classified Divergent.
GrowthResult integral_growth_check(const std::function<cplx(cplx)>& chi,
                                   cplx z0, cplx chi0, double r0,
                                   const QuadratureConfig& cfg = {});

// The explicit planar examples.
PlanarMap ex_log_stretch();                 // f(z) = -z log|z|^2
PlanarMap ex_log_quotient();                // f(z) = z / log|z|^2
PlanarMap ex_power_pair(double a, double b, double k);  // w^{a+1}/(a+1) + k wbar^{b+1}/(b+1)

}  // namespace gft

#endif
