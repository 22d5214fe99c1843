#ifndef POLYSIEVE_FACTORIZATION_HPP
#define POLYSIEVE_FACTORIZATION_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace polysieve {

// Miller-Rabin.  Deterministic witness set below 3.317e24; above that, 40
// rounds with bases drawn from a generator seeded by `seed` (fixed seed =
// reproducible verdicts).
bool is_probable_prime(const mpz_class& n, uint64_t seed = 0);
bool is_probable_prime_u64(uint64_t n);

struct Factorization {
  std::vector<mpz_class> primes;  // ascending, with multiplicity
  bool verified = false;          // product of primes equals |input|
};

// Trial division below 1e5, then deterministic primality testing and
// Pollard-rho (Brent) splitting; machine-word fast path when values fit.
// `budget` caps Pollard iterations per split; exceeding it raises
// budget_error.
Factorization factorize(const mpz_class& n, uint64_t budget = uint64_t(1) << 26,
                        uint64_t seed = 0);

// Omega(|n|): prime factors counted with multiplicity.  Domain error at 0.
int omega_with_multiplicity(const mpz_class& n,
                            uint64_t budget = uint64_t(1) << 26,
                            uint64_t seed = 0);

}  // namespace polysieve

#endif
