// Acceptance gate: one pass/fail line per criterion; nonzero exit on failure.
#include <cstdio>

#include "gft/checks.hpp"

int main() {
  const char* criteria[] = {
      "step_profile_tail_bound",
      "radial_profile_ball_mean",
      "planar_profile_ball_mean",
      "spherical_cap_identity",
      "profile_cube_integrability",
      "calderon_classification",
      "holder_exponent_formula",
      "inner_dilatation_field",
      "inversion_conformal_invariance",
      "geometric_inclusions",
      "limsup_verdicts",
      "empirical_holder_exponents",
      "poisson_kernel_suite",
      "singular_integral_law",
      "boundary_gradient_growth",
      "beltrami_identities",
  };
  gft::CheckConfig cfg;
  int failures = 0;
  int i = 0;
  for (const char* id : criteria) {
    ++i;
    const gft::CheckReport rep = gft::run_check(id, cfg);
    const bool ok = rep.status == gft::CheckStatus::Pass;
    if (!ok) ++failures;
    std::printf("%s criterion %2d: %s (%.0f ms)%s%s\n", ok ? "PASS" : "FAIL",
                i, id, rep.runtime_ms, rep.note.empty() ? "" : " -- ",
                rep.note.c_str());
    if (!ok) {
      for (std::size_t k = 0; k < rep.measured.size(); ++k)
        std::printf("       %s = %.12g (expected %s %.12g)\n",
                    rep.measured[k].name.c_str(), rep.measured[k].value,
                    rep.expected[k].name.c_str(), rep.expected[k].value);
    }
  }
  std::printf("%d/16 criteria passed\n", 16 - failures);
  return failures == 0 ? 0 : 1;
}
