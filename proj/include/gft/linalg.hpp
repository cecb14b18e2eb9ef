#ifndef GFT_LINALG_HPP
#define GFT_LINALG_HPP

#include <array>
#include <vector>

namespace gft {

// Dense n x n matrix, n <= 3, row-major.
struct Mat {
  int n;
  std::array<double, 9> a{};

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }

  static Mat identity(int n);
  static Mat zero(int n);
};

double det(const Mat& m);

// Singular values in descending order, via cyclic Jacobi on M^T M.
std::vector<double> singular_values(const Mat& m);

}  // namespace gft

#endif
