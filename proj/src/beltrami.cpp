#include "gft/beltrami.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace gft {

std::pair<cplx, cplx> wirtinger(const PlanarMap& f, cplx z, double h) {
  if (f.wirtinger_pair) return f.wirtinger_pair(z);
  if (h <= 0.0) h = 1e-6 * std::max(1.0, std::abs(z));
  const cplx fx = (f.f(z + h) - f.f(z - h)) / (2.0 * h);
  const cplx fy = (f.f(z + cplx(0.0, h)) - f.f(z - cplx(0.0, h))) / (2.0 * h);
  const cplx i(0.0, 1.0);
  return {0.5 * (fx - i * fy), 0.5 * (fx + i * fy)};
}

ComplexDilatation complex_dilatation(const PlanarMap& f, cplx z, double h) {
  const auto [fz, fzb] = wirtinger(f, z, h);
  if (std::abs(fz) < 1e-12)
    throw std::domain_error("complex_dilatation: degenerate point, f_z ~ 0");
  ComplexDilatation d;
  d.mu = fzb / fz;
  d.nu = d.mu * fz / std::conj(fz);
  d.K_mu = (1.0 + std::abs(d.mu)) / (1.0 - std::abs(d.mu));
  return d;
}

double holder_modulus_of_mu(const PlanarMap& f, cplx center, double radius,
                            double alpha, std::size_t pairs,
                            std::uint64_t seed, double h) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto sample = [&]() {
    for (;;) {
      const cplx z(2.0 * u(rng) - 1.0, 2.0 * u(rng) - 1.0);
      if (std::abs(z) <= 1.0) return center + radius * z;
    }
  };
  double cmax = 0.0;
  std::size_t done = 0;
  while (done < pairs) {
    const cplx z1 = sample(), z2 = sample();
    if (std::abs(z1 - z2) < 1e-12) continue;
    cplx m1, m2;
    try {
      m1 = complex_dilatation(f, z1, h).mu;
      m2 = complex_dilatation(f, z2, h).mu;
    } catch (const std::domain_error&) {
      continue;  // degenerate points skipped
    }
    ++done;
    cmax = std::max(cmax,
                    std::abs(m1 - m2) / std::pow(std::abs(z1 - z2), alpha));
  }
  return cmax;
}

BiLipschitzEstimate bilipschitz_estimate(const PlanarMap& f, cplx center,
                                         double radius, std::size_t pairs,
                                         std::uint64_t seed) {
  if (pairs < 100)
    throw std::invalid_argument("bilipschitz_estimate: pairs >= 100");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto sample = [&]() {
    for (;;) {
      const cplx z(2.0 * u(rng) - 1.0, 2.0 * u(rng) - 1.0);
      if (std::abs(z) <= 1.0) return center + radius * z;
    }
  };
  BiLipschitzEstimate e{std::numeric_limits<double>::infinity(), 0.0};
  std::size_t done = 0;
  while (done < pairs) {
    const cplx z1 = sample(), z2 = sample();
    const double dz = std::abs(z1 - z2);
    if (dz < 1e-12) continue;
    ++done;
    const double ratio = std::abs(f.f(z1) - f.f(z2)) / dz;
    e.l_est = std::min(e.l_est, ratio);
    e.L_est = std::max(e.L_est, ratio);
  }
  return e;
}

GrowthResult integral_growth_check(const std::function<cplx(cplx)>& chi,
                                   cplx z0, cplx chi0, double r0,
                                   const QuadratureConfig& cfg) {
  if (!(r0 > 0.0)) throw std::invalid_argument("integral_growth_check: r0 > 0");
  // shell j: r in [r0 2^{-j-1}, r0 2^{-j}]; S_j = Int Int |chi-chi0| dtheta dr/r
  constexpr int kShells = 64;
  constexpr int kRad = 16, kAng = 64;
  std::vector<double> gl_n, gl_w;
  gauss_legendre(kRad, gl_n, gl_w);
  std::vector<double> shell(kShells);
  double total = 0.0;
  for (int j = 0; j < kShells; ++j) {
    const double lhi = std::log(r0) - j * std::log(2.0);
    const double llo = lhi - std::log(2.0);
    double s = 0.0;
    for (int i = 0; i < kRad; ++i) {
      const double lr = 0.5 * (lhi + llo) + 0.5 * (lhi - llo) * gl_n[static_cast<std::size_t>(i)];
      const double r = std::exp(lr);
      double ring = 0.0;
      for (int a = 0; a < kAng; ++a) {
        const double th = 2.0 * M_PI * (a + 0.5) / kAng;
        ring += std::abs(chi(z0 + r * cplx(std::cos(th), std::sin(th))) - chi0);
      }
      s += 0.5 * (lhi - llo) * gl_w[static_cast<std::size_t>(i)] * ring *
           (2.0 * M_PI / kAng);
    }
    shell[static_cast<std::size_t>(j)] = s;
    total += s;
  }
  // block m groups shells [2^m, 2^{m+1}); harmonic shells give flat blocks
  std::vector<double> blocks;
  for (int m = 0; (1 << (m + 1)) <= kShells; ++m) {
    double b = 0.0;
    for (int j = (1 << m); j < (1 << (m + 1)); ++j) b += shell[static_cast<std::size_t>(j)];
    blocks.push_back(b);
  }
  GrowthResult res{GrowthVerdict::Divergent, total};
  const double tol = std::max(cfg.abs_tol, 1e-12);
  if (blocks.back() <= tol) {
    res.verdict = GrowthVerdict::Finite;
    return res;
  }
  const double ratio = blocks[blocks.size() - 2] > 0.0
                           ? blocks.back() / blocks[blocks.size() - 2]
                           : 0.0;
  if (ratio < 0.7) {
    res.verdict = GrowthVerdict::Finite;
    res.value = total + blocks.back() * ratio / (1.0 - ratio);
  }
  return res;
}

PlanarMap ex_log_stretch() {
  auto f = [](cplx z) {
    if (z == cplx(0.0, 0.0)) return cplx(0.0, 0.0);
    return -z * std::log(std::norm(z));
  };
  auto wp = [](cplx z) -> std::pair<cplx, cplx> {
    if (z == cplx(0.0, 0.0))
      throw std::domain_error("ex_log_stretch: derivative undefined at 0");
    return {cplx(-1.0 - std::log(std::norm(z)), 0.0), -z / std::conj(z)};
  };
  return {f, wp, "log_stretch"};
}

PlanarMap ex_log_quotient() {
  auto f = [](cplx z) {
    if (z == cplx(0.0, 0.0)) return cplx(0.0, 0.0);
    return z / std::log(std::norm(z));
  };
  return {f, nullptr, "log_quotient"};
}

PlanarMap ex_power_pair(double a, double b, double k) {
  // principal branch; smooth off the negative real axis and 0
  auto f = [a, b, k](cplx w) {
    return std::pow(w, a + 1.0) / (a + 1.0) +
           k * std::pow(std::conj(w), b + 1.0) / (b + 1.0);
  };
  auto wp = [a, b, k](cplx w) -> std::pair<cplx, cplx> {
    if (w == cplx(0.0, 0.0))
      throw std::domain_error("ex_power_pair: derivative undefined at 0");
    return {std::pow(w, a), k * std::pow(std::conj(w), b)};
  };
  return {f, wp, "power_pair"};
}

}  // namespace gft
