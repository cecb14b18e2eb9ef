#ifndef GFT_DILATATION_HPP
#define GFT_DILATATION_HPP

#include <cstdint>
#include <vector>

#include "gft/linalg.hpp"
#include "gft/maps.hpp"

namespace gft {

struct DistortionSample {
  double J = 0.0;        // Jacobian determinant
  double l = 0.0;        // smallest singular value
  double op_norm = 0.0;  // largest singular value
  double K_I = 1.0;      // |J| / l^n; 1 for the zero matrix, +inf if J = 0
  double K_O = 1.0;      // op_norm^n / |J|; same conventions
  Point point;
  bool valid = true;
  bool orientation_reversing = false;  // J < 0 is flagged, not folded in
};

DistortionSample distortion_from_jacobian(const Mat& M, const Point& x);

// Per-point distortion via analytic Jacobian when present, numeric otherwise.
std::vector<DistortionSample> k_i_field(const DifferentiableMap& f,
                                        const std::vector<Point>& points,
                                        double h = 0.0);

struct InvarianceResult {
  double max_rel_dev;
  std::size_t samples;
};

// K_I of the inversion extension at x (|x| > 1) vs K_I of f at psi(x).
// radial_guard lists radii of psi(x) to keep a 1e-4 margin from (profile
// breakpoints, where the Jacobian jumps).
InvarianceResult conformal_invariance_check(
    const DifferentiableMap& f, std::size_t samples, std::uint64_t seed,
    const std::vector<double>& radial_guard = {});

}  // namespace gft

#endif
