#include "gft/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gft {

namespace {

void push_flat_and_spike(std::vector<StepProfile::Piece>& pieces, double lo,
                         double hi, double width, double value) {
  const double split = hi - width;
  if (split > lo) pieces.push_back({lo, split, 1.0});
  pieces.push_back({split > lo ? split : lo, hi, value});
}

}  // namespace

StepProfile StepProfile::example1(int k_max) {
  StepProfile p{ProfileScheme::Example1, k_max, {}};
  for (int k = 0; k <= k_max; ++k) {
    const double lo = static_cast<double>(k) / (k + 1);
    const double hi = static_cast<double>(k + 1) / (k + 2);
    const double width = std::ldexp(1.0, -4 * k - 1);
    push_flat_and_spike(p.pieces, lo, hi, width, std::ldexp(1.0, k));
  }
  // beyond truncation the spikes are dropped
  p.pieces.push_back({static_cast<double>(k_max + 1) / (k_max + 2), 1.0, 1.0});
  return p;
}

StepProfile StepProfile::example4(int k_max) {
  StepProfile p{ProfileScheme::Example4, k_max, {}};
  p.pieces.push_back({0.0, 1.0 / (k_max + 1), 1.0});
  for (int k = k_max; k >= 1; --k) {
    const double lo = 1.0 / (k + 1);
    const double hi = 1.0 / k;
    const double width = std::ldexp(1.0, -4 * k - 1);
    push_flat_and_spike(p.pieces, lo, hi, width, std::ldexp(1.0, k - 1));
  }
  return p;
}

StepProfile StepProfile::constant_one() {
  return {ProfileScheme::Custom, 0, {{0.0, 1.0, 1.0}}};
}

StepProfile StepProfile::custom(std::vector<Piece> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  for (const Piece& q : pieces)
    if (!(q.lo < q.hi) || q.value < 1.0)
      throw std::invalid_argument("StepProfile::custom: bad piece");
  return {ProfileScheme::Custom, 0, std::move(pieces)};
}

double beta_eval(const StepProfile& p, double t) {
  if (!(t > 0.0 && t <= 1.0))
    throw std::domain_error("beta_eval: t outside (0, 1]");
  auto it = std::upper_bound(
      p.pieces.begin(), p.pieces.end(), t,
      [](double v, const StepProfile::Piece& q) { return v < q.hi; });
  if (it == p.pieces.end()) return 1.0;
  // piece interiors carry the value; shared edges evaluate to 1
  if (t > it->lo && t < it->hi) return it->value;
  return 1.0;
}

std::vector<double> profile_breakpoints(const StepProfile& p, double a,
                                        double b) {
  std::vector<double> bps;
  for (const StepProfile::Piece& q : p.pieces) {
    if (q.lo > a && q.lo < b) bps.push_back(q.lo);
    if (q.hi > a && q.hi < b) bps.push_back(q.hi);
  }
  std::sort(bps.begin(), bps.end());
  bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
  return bps;
}

namespace {

double weight_antiderivative(Weight w, double lo, double hi) {
  switch (w) {
    case Weight::One:
      return hi - lo;
    case Weight::T:
      return 0.5 * (hi * hi - lo * lo);
    case Weight::T2:
      return (hi * hi * hi - lo * lo * lo) / 3.0;
  }
  return 0.0;
}

}  // namespace

double integrate_beta_power(const StepProfile& p, int power, Weight w,
                            double a, double b) {
  if (!(a >= 0.0 && a < b && b <= 1.0))
    throw std::invalid_argument("integrate_beta_power: need 0 <= a < b <= 1");
  if (power < 1) throw std::invalid_argument("integrate_beta_power: power >= 1");
  double s = 0.0;
  for (const StepProfile::Piece& q : p.pieces) {
    const double lo = std::max(a, q.lo);
    const double hi = std::min(b, q.hi);
    if (lo >= hi) continue;
    s += std::pow(q.value, power) * weight_antiderivative(w, lo, hi);
  }
  return s;
}

double integrate_beta_over_t(const StepProfile& p, double r) {
  if (!(r > 0.0 && r <= 1.0))
    throw std::domain_error("integrate_beta_over_t: r outside (0, 1]");
  // Int_r^1 beta/t dt, negated
  double s = 0.0;
  for (const StepProfile::Piece& q : p.pieces) {
    const double lo = std::max(r, q.lo);
    const double hi = q.hi;
    if (lo >= hi) continue;
    s += q.value * std::log(hi / lo);
  }
  return -s;
}

CalderonVerdict calderon_check(const OrliczFunction& phi, int n,
                               const QuadratureConfig& cfg) {
  if (n < 3) throw std::invalid_argument("calderon_check: n >= 3 required");
  const double p = 1.0 / (n - 2);
  bool zero_seen = false;
  auto integrand = [&](double t) {
    const double v = phi.phi(t);
    if (v <= 0.0) {
      zero_seen = true;
      return 0.0;
    }
    return std::pow(t / v, p);
  };
  TailResult tail = integrate_tail(integrand, 1.0, cfg);
  if (zero_seen) return CalderonVerdict::Violated;
  switch (tail.verdict) {
    case TailVerdict::Converged:
      return CalderonVerdict::Satisfied;
    case TailVerdict::Divergent:
      return CalderonVerdict::Violated;
    default:
      return CalderonVerdict::Inconclusive;
  }
}

DoublingReport doubling_check(const OrliczFunction& phi, double T, int grid) {
  if (!(T > 0.0)) throw std::invalid_argument("doubling_check: T > 0");
  DoublingReport rep{true, 0.0, 0.0};
  const double span = 20.0 * std::log(2.0);
  for (int i = 0; i < grid; ++i) {
    const double t = T * std::exp(span * i / (grid - 1));
    const double lo = phi.phi(t);
    const double hi = phi.phi(2.0 * t);
    const double ratio = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    if (!std::isfinite(ratio) || ratio > 1e12) {
      rep.holds = false;
      rep.t_fail = t;
      return rep;
    }
    rep.C_est = std::max(rep.C_est, ratio);
  }
  return rep;
}

SobolevReport sobolev_inclusion_report(const OrliczFunction& phi, int n,
                                       double p, const QuadratureConfig& cfg) {
  if (!(p > 1.0)) throw std::invalid_argument("sobolev_inclusion_report: p > 1");
  SobolevReport rep{};
  rep.liminf_est = std::numeric_limits<double>::infinity();
  // reach t = 2^60 so a decaying phi(t)/t^p drops below the zero threshold
  const double span = 60.0 * std::log(2.0);
  const int grid = 200;
  for (int i = 0; i < grid; ++i) {
    const double t = std::exp(span * i / (grid - 1));
    rep.liminf_est = std::min(rep.liminf_est, phi.phi(t) / std::pow(t, p));
  }
  rep.w1p_inclusion = rep.liminf_est > 1e-12;
  rep.calderon = (n >= 3) ? calderon_check(phi, n, cfg)
                          : CalderonVerdict::Inconclusive;
  rep.morrey_alpha = (p > n) ? 1.0 - n / p : 0.0;
  return rep;
}

}  // namespace gft
