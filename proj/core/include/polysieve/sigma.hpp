#ifndef POLYSIEVE_SIGMA_HPP
#define POLYSIEVE_SIGMA_HPP

#include <memory>
#include <vector>

#include "polysieve/chebyshev.hpp"
#include "polysieve/quad_real.hpp"

namespace polysieve {

// Sieve dimension g >= 1.  Dimension g+1 is a distinct instance.
class SieveDimension {
 public:
  explicit SieveDimension(int g);
  int value() const { return g_; }

 private:
  int g_;
};

// The Ankeny-Onishi function sigma_g:
//   sigma_g(u) = A_g u^g on (0, 2],  A_g = (2 e^gamma)^{-g} / g!,
//   (u^{-g} sigma_g(u))' = -g u^{-g-1} sigma_g(u - 2) for u > 2,
// continuous, increasing to 1.  1/sigma_g supplies the initial segment of
// the upper sieve function F_g.
class SigmaFunction {
 public:
  SigmaFunction(SieveDimension g, double u_cap = 64.0);

  int g() const { return g_; }
  double u_cap() const { return to_double(cap_); }

  // Leading coefficient A_g (= sigma_g(1)).
  double leading_coefficient() const { return to_double(a_g_); }

  quad eval_q(quad u) const;
  double operator()(double u) const;

 private:
  int g_;
  quad a_g_;
  quad cap_;
  std::vector<ChebPiece> pieces_;
  std::vector<ChebPieceD> pieces_d_;
};

// sigma_g(u); domain error for u <= 0.  Instances are cached per dimension.
double sigma(SieveDimension g, double u);

// Shared cached instance covering arguments up to at least u_cap.
std::shared_ptr<const SigmaFunction> shared_sigma(SieveDimension g,
                                                  double u_cap = 64.0);

}  // namespace polysieve

#endif
