#ifndef POLYSIEVE_POLYNOMIAL_HPP
#define POLYSIEVE_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace polysieve {

// Univariate integer-coefficient polynomial, coefficients ascending by
// degree with no trailing zeros.
struct Polynomial {
  std::vector<mpz_class> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  mpz_class eval(const mpz_class& x) const;
  std::string to_string(char var = 'n') const;

  bool operator==(const Polynomial& other) const = default;
};

Polynomial parse_polynomial(const std::string& text);

// Coefficients reduced mod m, ascending, for fast repeated evaluation.
std::vector<uint64_t> reduced_coeffs(const Polynomial& p, uint64_t m);
uint64_t eval_mod(const std::vector<uint64_t>& reduced, uint64_t a, uint64_t m);

// The product H = h_1 ... h_g of pairwise-distinct factors of one common
// degree k.
struct PolynomialSystem {
  std::vector<Polynomial> factors;
  int g = 0;
  int k = 0;
  mpz_class H0;  // H(0)

  mpz_class eval(const mpz_class& x) const;
  std::string to_string(char var = 'n') const;
};

// Semicolon-separated factors, e.g. "n^3+2; n^3+6".  Validates equal degrees
// and pairwise distinctness; irreducibility is the caller's assertion (see
// irreducibility_screen in arith.hpp for the heuristic check).
PolynomialSystem parse_polynomial_system(const std::string& text);

}  // namespace polysieve

#endif
