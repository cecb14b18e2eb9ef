#ifndef GFT_PROFILES_HPP
#define GFT_PROFILES_HPP

#include <functional>
#include <string>
#include <vector>

#include "gft/quadrature.hpp"

namespace gft {

enum class ProfileScheme { Example1, Example4, Custom };

// Piecewise-constant dilatation profile beta(t) on (0, 1], beta >= 1.
// Example1: value 2^k on the spike ((k+1)/(k+2) - 2^{-4k-1}, (k+1)/(k+2)),
//           value 1 on the rest of [k/(k+1), (k+1)/(k+2)]; spikes
//           accumulate at t = 1.
// Example4: value 2^{k-1} on (1/k - 2^{-4k-1}, 1/k), value 1 on
//           [1/(k+1), 1/k - 2^{-4k-1}]; spikes accumulate at t = 0.
// Spikes with k > k_max collapse to value 1.
struct StepProfile {
  struct Piece {
    double lo, hi, value;  // value on the open interior; endpoints are 1
  };

  ProfileScheme scheme;
  int k_max;
  std::vector<Piece> pieces;  // sorted, covering (0, 1]

  static StepProfile example1(int k_max = 40);
  static StepProfile example4(int k_max = 40);
  static StepProfile constant_one();
  static StepProfile custom(std::vector<Piece> pieces);
};

// Exact piecewise evaluation.  Throws outside (0, 1].
double beta_eval(const StepProfile& p, double t);

// Piece edges inside (a, b), for breakpoint-aware quadrature.
std::vector<double> profile_breakpoints(const StepProfile& p, double a = 0.0,
                                        double b = 1.0);

enum class Weight { One, T, T2 };

// Exact Int_a^b beta(t)^power * w(t) dt; closed form per piece, no quadrature.
double integrate_beta_power(const StepProfile& p, int power, Weight w,
                            double a, double b);

// Int_1^r beta(t)/t dt (negative for r < 1); closed form.
double integrate_beta_over_t(const StepProfile& p, double r);

struct OrliczFunction {
  std::function<double(double)> phi;
  std::string label;
};

enum class CalderonVerdict { Satisfied, Violated, Inconclusive };

// Convergence of Int_1^inf (t/phi(t))^{1/(n-2)} dt, n >= 3.
CalderonVerdict calderon_check(const OrliczFunction& phi, int n,
                               const QuadratureConfig& cfg = {});

struct DoublingReport {
  bool holds;
  double C_est;     // max of phi(2t)/phi(t) over the grid when holds
  double t_fail;    // witness when !holds
};

// phi(2t) <= C phi(t) tested on a log grid t in [T, 2^20 T].
DoublingReport doubling_check(const OrliczFunction& phi, double T,
                              int grid = 200);

struct SobolevReport {
  bool w1p_inclusion;       // liminf phi(t)/t^p > 0 on the grid
  double liminf_est;
  CalderonVerdict calderon;  // gate for the W^{1,n-1} inclusion
  double morrey_alpha;       // 1 - n/p when p > n, else 0
};

SobolevReport sobolev_inclusion_report(const OrliczFunction& phi, int n,
                                       double p,
                                       const QuadratureConfig& cfg = {});

}  // namespace gft

#endif
