#ifndef POLYSIEVE_ARITH_HPP
#define POLYSIEVE_ARITH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polysieve/polynomial.hpp"

namespace polysieve {

// Exact root counts modulo d by brute force over residues (d <= 1e7):
//   rho(d)  = #{a mod d : H(a) = 0 (d)}
//   rho1(d) = #{a mod d : (a,d) = 1 and H(a) = 0 (d)}
//   rho2(d) = #{a mod d : a H(a) = 0 (d)}
long rho(const PolynomialSystem& H, uint64_t d);
long rho1(const PolynomialSystem& H, uint64_t d);
long rho2(const PolynomialSystem& H, uint64_t d);

// Root count modulo a prime via gcd(X^p - X, H) over F_p; used by the
// prime-sum routines where brute force would be quadratic.
long rho_mod_prime(const PolynomialSystem& H, uint64_t p);
long rho1_mod_prime(const PolynomialSystem& H, uint64_t p);

// Theorem hypothesis: rho1(p) < p - 1 for every prime.  Only p <= gk + 1
// needs checking; beyond that rho1(p) <= deg H = gk < p - 1 automatically.
struct HypothesisWitness {
  uint64_t p = 0;
  long rho1 = 0;
};

struct HypothesisReport {
  bool pass = true;
  std::vector<HypothesisWitness> checked;
  std::optional<HypothesisWitness> failure;  // first failing prime
};

HypothesisReport check_hypothesis(const PolynomialSystem& H);

// The three prime sums behind the sieve-dimension readings:
//   sum_{p<=x} rho1(p)/phi(p) log p   ~ g log x
//   sum_{p<=x} rho1(p)/p log p        ~ g log x
//   sum_{p<=x} rho2(p)/p log p        ~ (g+1) log x
struct DensitySums {
  double x = 0;
  double rho1_over_phi = 0;
  double rho1_over_p = 0;
  double rho2_over_p = 0;
};

DensitySums density_sum(const PolynomialSystem& H, uint64_t x);

// V(z)  = prod_{p<z} (1 - rho1(p)/phi(p))
// V'(z) = prod_{p<z} (1 - rho2(p)/p)
double V_product(const PolynomialSystem& H, uint64_t z);
double Vprime_product(const PolynomialSystem& H, uint64_t z);

// V'(z) e^gamma log z / V(z); tends to 1 by Mertens' product formula.
double mertens_ratio(const PolynomialSystem& H, uint64_t z);

// Necessity checks on the user's irreducibility assertion: a rational root
// (for k <= 3 this settles reducibility) and the existence of a root-free
// prime p <= 500.  Warns, never blocks.
struct IrreducibilityScreen {
  bool suspicious = false;
  std::vector<std::string> warnings;
};

IrreducibilityScreen irreducibility_screen(const PolynomialSystem& H);

}  // namespace polysieve

#endif
