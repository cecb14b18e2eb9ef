#ifndef GFT_GEOMETRY_HPP
#define GFT_GEOMETRY_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gft {

// Euclidean point/vector in R^n, n >= 2.
using Point = std::vector<double>;

double norm(const Point& x);
double norm_sq(const Point& x);
double dot(const Point& x, const Point& y);
double dist(const Point& x, const Point& y);
Point operator+(const Point& x, const Point& y);
Point operator-(const Point& x, const Point& y);
Point operator*(double c, const Point& x);
Point normalized(const Point& x);

Point unit_axis(int n, int k);  // e_{k+1} in R^n

// Surface area of S^{n-1} and volume of B^n.  omega == n * Omega.
struct ConstantsN {
  int n;
  double omega;
  double Omega;
};
ConstantsN constants_n(int n);

enum class RegionKind {
  Ball,
  Annulus,
  BallCapPlus,            // B(center, r_outer) \ closed unit ball, center on S^{n-1}
  BallCapMinus,           // B(center, r_outer) ∩ B^n, center on S^{n-1}
  BallIntersectUnitBall,  // B(center, r_outer) ∩ B^n, arbitrary center
};

struct BallRegion {
  RegionKind kind;
  Point center;
  double r_inner = 0.0;
  double r_outer;

  static BallRegion ball(Point center, double r);
  static BallRegion annulus(Point center, double r_inner, double r_outer);
  static BallRegion cap_plus(Point center_on_sphere, double eps);
  static BallRegion cap_minus(Point center_on_sphere, double eps);
  static BallRegion intersect_unit_ball(Point center, double r);
};

// Tolerance for "center lies on the unit sphere".
inline constexpr double kOnSphereTol = 1e-12;
bool on_unit_sphere(const Point& x);

// psi(x) = x / |x|^2.  Involution, fixes S^{n-1}.  Throws on x = 0.
Point inversion(const Point& x);

// Chordal metric on the one-point compactification of R^n.
double chordal_distance(const Point& x, const Point& y);
double chordal_distance_inf(const Point& x);  // h(x, infinity)

// Surface measure of the polar cap of spherical radius phi:
//   A(phi) = omega_{n-1} * Int_0^phi sin^{n-2} theta dtheta.
double cap_area(double phi, int n);

// H^2(B(zeta0, eps) ∩ S^2) for |zeta0| = 1; equals pi * eps^2.
double cap_ball_intersection_area(double eps, int n = 3);

// Half-angle gamma of the cap S(0, r) ∩ B(c, eps) seen from the origin,
// where d = |c|:  cos gamma = (r^2 + d^2 - eps^2) / (2 r d).
// Returns 0 for empty intersection, pi when the whole sphere is inside.
double sphere_cap_angle(double r, double d, double eps);

// Orthonormal basis {axis, u, v} completing a unit axis (n = 2 or 3).
// For n = 2 only u is meaningful.
struct Frame {
  Point axis, u, v;
};
Frame make_frame(const Point& axis);

struct SampledVerdict {
  bool pass;
  std::size_t samples_checked;
  double worst_value;               // margin-style statistic, check-specific
  std::optional<Point> counterexample;
};

// Uniform sample from B(center, r) via rejection from the bounding cube.
Point sample_ball(std::mt19937_64& rng, const Point& center, double r);

// Samples B_+(zeta0, eps) and asserts psi(B_+) ⊂ B_-(zeta0, eps).
SampledVerdict inclusion_plus_minus(const Point& zeta0, double eps,
                                    std::size_t samples, std::uint64_t seed);

// Samples B(zeta0, r) ∩ B^n, r < 1/2, and asserts min |y| >= 1/2.
SampledVerdict lower_norm_bound(const Point& zeta0, double r,
                                std::size_t samples, std::uint64_t seed);

}  // namespace gft

#endif
