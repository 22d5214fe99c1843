#ifndef POLYSIEVE_CHEBYSHEV_HPP
#define POLYSIEVE_CHEBYSHEV_HPP

// Chebyshev interpolation on short segments, in 128-bit arithmetic.  The
// delay-equation marches represent each solution between consecutive
// derivative-discontinuity abscissas as one Chebyshev series; integrals of
// tabulated right-hand sides are then exact series antiderivatives.

#include <vector>

#include "polysieve/quad_real.hpp"

namespace polysieve {

// One Chebyshev series sum_k c_k T_k mapped onto [lo, hi].
struct ChebPiece {
  quad lo = 0;
  quad hi = 0;
  std::vector<quad> coef;
};

quad cheb_eval(const ChebPiece& p, quad x);

// Same series with coefficients narrowed to double, for fast facades.
struct ChebPieceD {
  double lo = 0;
  double hi = 0;
  std::vector<double> coef;
};

double cheb_eval(const ChebPieceD& p, double x);

ChebPieceD narrow(const ChebPiece& p);

// Shared node/transform machinery for a fixed interpolation degree.
class ChebEngine {
 public:
  explicit ChebEngine(int degree);

  int degree() const { return n_; }

  // The n+1 Chebyshev-Lobatto abscissas mapped into [lo, hi], ascending.
  std::vector<quad> mapped_nodes(quad lo, quad hi) const;

  // Series coefficients from values at mapped_nodes() (same ordering).
  std::vector<quad> to_coefficients(const std::vector<quad>& values) const;

  // Antiderivative series on [lo, hi] vanishing at lo.
  static std::vector<quad> antiderivative(const std::vector<quad>& coef,
                                          quad lo, quad hi);

 private:
  int n_;
  std::vector<quad> nodes_;              // ascending on [-1, 1]
  std::vector<std::vector<quad>> tmat_;  // tmat_[k][j] = T_k(nodes_[j])
};

}  // namespace polysieve

#endif
