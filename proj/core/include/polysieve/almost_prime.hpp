#ifndef POLYSIEVE_ALMOST_PRIME_HPP
#define POLYSIEVE_ALMOST_PRIME_HPP

#include <cstdint>

#include "polysieve/polynomial.hpp"

namespace polysieve {

// li(x) as adaptive quadrature of 1/log t on [2, x].
double li(double x);

// Counts over the prime window (x, 2x] for the sequence A = {H(p)}.
struct EmpiricalReport {
  uint64_t x = 0;
  uint64_t window_lo = 0;  // exclusive
  uint64_t window_hi = 0;  // inclusive
  uint64_t prime_count = 0;
  int r = 0;
  uint64_t almost_prime_count = 0;        // Omega(H(p)) <= r
  uint64_t factorizations_verified = 0;   // reconstructed products
  double density_ratio = 0;               // density sum / (g log x)
  double normalized_count = 0;            // count / (x / log^{g+1} x)
};

EmpiricalReport count_almost_primes(const PolynomialSystem& H, uint64_t x,
                                    int r, uint64_t seed = 0);

// Diagnostic Richert weighted sum over the raw sequence:
//   W(A) = sum_{n in A, (n, P(z)) = 1} (eta - sum_{z <= q < y, q | n} (1 - log q / log y))
// with X = li(x), z = X^{1/v}, y = X^{1/u}, eta = r + 1 - g k u.  Both sides
// of the almost-prime comparison are reported, not asserted: the o(.) terms
// are not computable at desk scale.
struct WeightedSumReport {
  double X = 0;
  double z = 0;
  double y = 0;
  double eta = 0;
  uint64_t survivors = 0;                // (n, P(z)) = 1
  uint64_t almost_prime_survivors = 0;   // survivors with Omega(n) <= r
  double W = 0;
  double W_over_r_plus_1 = 0;
};

WeightedSumReport weighted_sum_W(const PolynomialSystem& H, uint64_t x, int r,
                                 double v, double u, uint64_t seed = 0);

}  // namespace polysieve

#endif
