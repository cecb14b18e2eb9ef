#ifndef GFT_CONDITIONS_HPP
#define GFT_CONDITIONS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gft/maps.hpp"
#include "gft/profiles.hpp"
#include "gft/quadrature.hpp"

namespace gft {

// Q >= 0 on the unit ball, zero-extended outside; the reflected field is
// Q*(x) = Q(psi(x)) for |x| > 1.  A radial closed form, when present,
// unlocks exact angular reduction in the region integrals.
struct QField {
  int n;
  std::function<double(const Point&)> base;
  std::function<double(double)> radial;    // Q(x) = radial(|x|), optional
  std::vector<double> radial_breakpoints;  // jumps of the radial form

  double eval(const Point& x) const;            // zero outside B^n
  double eval_reflected(const Point& x) const;  // Q inside, Q(psi(x)) outside

  static QField constant(int n, double c);
  static QField from_profile(int n, StepProfile profile);
};

// Int_region Q dm (or Q* with reflected), exploiting radial symmetry when
// available, generic ball quadrature otherwise.
double integrate_q(const QField& Q, const BallRegion& region, bool reflected,
                   const QuadratureConfig& cfg = {});

// (1 / (Omega_n eps^n)) Int_{B(zeta,eps) ∩ B^n} Q dm.
double ball_mean(const QField& Q, const Point& zeta, double eps,
                 const QuadratureConfig& cfg = {});

struct SupMean {
  double value;
  double arg_eps;
};

// Max of ball_mean over a log-spaced eps grid in (eps_min, eps0].
SupMean sup_ball_mean(const QField& Q, const Point& zeta, double eps0,
                      int grid = 30, double eps_min = 0.02,
                      const QuadratureConfig& cfg = {});

// q_{x0}(r) resp. q*_{x0}(r): normalized mean of Q (or Q*) over |x-x0| = r.
double spherical_mean(const QField& Q, const Point& x0, double r,
                      bool reflected, const QuadratureConfig& cfg = {});

enum class LimsupVerdict { Bounded, Unbounded };

struct LimsupResult {
  double bound_estimate;  // max over the t grid
  LimsupVerdict verdict;
  std::vector<std::pair<double, double>> sweep;  // (t, integral value)
};

// I(t) = Int_t^{eps0} (alpha - q*_{x0}(r)^{-1/(n-1)}) dr/r for t descending
// to t_floor; Unbounded when the per-decade increments fail to decay.
LimsupResult limsup_condition(const QField& Q, const Point& x0, double alpha,
                              double eps0, double t_floor = 1e-5,
                              const QuadratureConfig& cfg = {});

struct ReflectionBound {
  double lhs;  // Int_{B(zeta0,r)} Q* dm
  double rhs;  // (4^n + 1) Int_{B(zeta0,r) ∩ B^n} Q dm
  bool pass;
};

ReflectionBound reflection_factor_bound(const QField& Q, const Point& zeta0,
                                        double r,
                                        const QuadratureConfig& cfg = {});

// Int_{eps < |x-x0| < eps0} Q*(x)/|x-x0|^n dm, divided by log(1/eps).
double annulus_log_bound(const QField& Q, const Point& x0, double eps,
                         double eps0, const QuadratureConfig& cfg = {});

// alpha = (omega_{n-1} log 2 / (Omega_n (4^n + 1) 2^{n+1} C))^{1/(n-1)}.
double holder_exponent_theorem1(double C, int n);

struct HolderCertificate {
  double alpha;
  double constant;
  double eps0;
  double delta0;  // min(1/2, eps0^2)
  Point center;
};

struct HolderEstimate {
  double constant_estimate;  // max |f(x)-f(c)| / |x-c|^alpha over samples
  double fitted_exponent;    // least-squares slope in log-log
};

// Samples x in B(center, radius) ∩ (domain ball of radius domain_radius),
// radii log-uniform down to r_min.
HolderEstimate empirical_holder(const DifferentiableMap& f,
                                const Point& center, double alpha,
                                double radius, std::size_t pairs,
                                std::uint64_t seed,
                                double domain_radius = 1.0,
                                double r_min = 1e-6);

}  // namespace gft

#endif
