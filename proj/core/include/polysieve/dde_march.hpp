#ifndef POLYSIEVE_DDE_MARCH_HPP
#define POLYSIEVE_DDE_MARCH_HPP

#include <vector>

#include "polysieve/chebyshev.hpp"
#include "polysieve/sigma.hpp"

namespace polysieve {

// Piecewise-Chebyshev solution of the coupled sieve-function system
//   (u^g F)' = g u^{g-1} f(u-1),  u > alpha,   F = 1/sigma_g on (0, alpha],
//   (u^g f)' = g u^{g-1} F(u-1),  u > beta,    f = 0 on (0, beta],
// marched by the method of steps.  Segment boundaries sit on every
// derivative-discontinuity abscissa (alpha+m, beta+m, and the integers that
// propagate from sigma's delay kinks), so each segment is smooth and one
// series per segment holds it to near working precision.
struct SievePairSolution {
  quad alpha = 0;
  quad beta = 0;
  quad u_end = 0;
  std::vector<ChebPiece> F_pieces;  // cover (alpha, u_end]
  std::vector<ChebPiece> f_pieces;  // cover (beta, u_end]
  quad F_end = 0;
  quad f_end = 0;

  quad eval_F(const SigmaFunction& sig, quad u) const;
  quad eval_f(quad u) const;

  // Sorted abscissas where some derivative of F or f jumps.
  std::vector<double> kink_abscissas() const;
};

SievePairSolution march_sieve_pair(const SigmaFunction& sig, quad alpha,
                                   quad beta, quad u_end);

}  // namespace polysieve

#endif
