#ifndef POLYSIEVE_SIEVE_LIMITS_HPP
#define POLYSIEVE_SIEVE_LIMITS_HPP

#include <string>
#include <vector>

#include "polysieve/sigma.hpp"

namespace polysieve {

enum class LimitsSource { solved, reference };

// The sifting limits (alpha_g, beta_g): the free boundaries of the initial
// segments of F_g and f_g.  alpha_1 = beta_1 = 2 and alpha_g > beta_g > 2
// for g > 1.
struct SieveLimits {
  double alpha = 0;
  double beta = 0;
  int g = 0;
  LimitsSource source = LimitsSource::solved;
};

// Throws domain_error when the invariants fail (g=1 forces (2,2); g>1 needs
// alpha > beta > 2; beta <= 2.5 g over the supported range).
void validate(const SieveLimits& limits);

// Determine (alpha_g, beta_g) by shooting: march the delay system from trial
// switch points and adjust them until F and f both settle at 1, with
// residuals |F(U)-1|, |f(U)-1| <= tol at U = alpha_g + 12.  The marches run
// in 128-bit arithmetic; the two residual directions are solved as a nested
// pair of one-dimensional root finds (mean level, then difference).
// g = 1 returns (2, 2) exactly.
SieveLimits solve_sieve_limits(SieveDimension g, double tol = 1e-9);

// Residuals actually achieved by the last verification march of a solve.
struct ShootingReport {
  double residual_F = 0;
  double residual_f = 0;
  int marches = 0;
};
SieveLimits solve_sieve_limits(SieveDimension g, double tol,
                               ShootingReport* report);

// Literature values shipped with the package (also in data/sifting_limits.txt).
SieveLimits reference_limits(SieveDimension g);
int max_reference_dimension();

// Plain-text rows "g alpha beta"; '#' starts a comment.
std::vector<SieveLimits> load_reference_limits(const std::string& path);

// Memoized front end used by everything downstream.
SieveLimits get_limits(SieveDimension g, LimitsSource source);

}  // namespace polysieve

#endif
