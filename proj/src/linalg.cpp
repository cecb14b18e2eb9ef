#include "gft/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gft {

Mat Mat::identity(int n) {
  Mat m = zero(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::zero(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("Mat: n must be in [1, 3]");
  Mat m;
  m.n = n;
  m.a.fill(0.0);
  return m;
}

double det(const Mat& m) {
  switch (m.n) {
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default:
      throw std::invalid_argument("det: unsupported dimension");
  }
}

std::vector<double> singular_values(const Mat& m) {
  const int n = m.n;
  // B = M^T M, symmetric positive semidefinite
  double b[3][3] = {};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += m(k, i) * m(k, j);
      b[i][j] = s;
    }
  // cyclic Jacobi eigenvalue iteration
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += b[p][q] * b[p][q];
    if (off < 1e-30 * (1.0 + b[0][0] * b[0][0])) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (b[p][q] == 0.0) continue;
        const double tau = (b[q][q] - b[p][p]) / (2.0 * b[p][q]);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double bkp = b[k][p], bkq = b[k][q];
          b[k][p] = c * bkp - s * bkq;
          b[k][q] = s * bkp + c * bkq;
        }
        for (int k = 0; k < n; ++k) {
          const double bpk = b[p][k], bqk = b[q][k];
          b[p][k] = c * bpk - s * bqk;
          b[q][k] = s * bpk + c * bqk;
        }
      }
    }
  }
  std::vector<double> sv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sv[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, b[i][i]));
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace gft
