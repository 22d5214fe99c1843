#include "polysieve/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "polysieve/errors.hpp"
#include "polysieve/primes.hpp"

namespace polysieve {

namespace {

const std::vector<uint64_t>& trial_primes() {
  static const std::vector<uint64_t> primes = primes_up_to(100000);
  return primes;
}

// Below this bound the 12-witness Miller-Rabin test is deterministic.
const mpz_class& mr_deterministic_bound() {
  static const mpz_class bound("3317044064679887385961981");
  return bound;
}

constexpr uint64_t kWitnesses[] = {2,  3,  5,  7,  11, 13,
                                   17, 19, 23, 29, 31, 37};

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool mr_witness_u64(uint64_t n, uint64_t a) {
  if (a % n == 0) return true;
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool mr_witness_mpz(const mpz_class& n, const mpz_class& a) {
  if (a % n == 0) return true;
  mpz_class d = n - 1;
  int s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

// Pollard-rho, Brent's cycle finding, 64-bit.
uint64_t pollard_brent_u64(uint64_t n, uint64_t& budget, uint64_t seed) {
  if ((n & 1) == 0) return 2;
  std::mt19937_64 rng(seed ^ n);
  for (int attempt = 0; attempt < 64; ++attempt) {
    uint64_t y = rng() % (n - 3) + 2;
    uint64_t c = rng() % (n - 1) + 1;
    uint64_t m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
      for (uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        uint64_t lim = std::min(m, r - k);
        for (uint64_t i = 0; i < lim; ++i) {
          y = (mulmod_u64(y, y, n) + c) % n;
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        if (budget < lim) throw budget_error("factorization budget exceeded");
        budget -= lim;
        g = std::gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      do {
        ys = (mulmod_u64(ys, ys, n) + c) % n;
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
  throw budget_error("factorization: Pollard rho failed to split");
}

mpz_class pollard_brent_mpz(const mpz_class& n, uint64_t& budget,
                            uint64_t seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  std::mt19937_64 rng(seed ^ mpz_get_ui(n.get_mpz_t()));
  for (int attempt = 0; attempt < 64; ++attempt) {
    mpz_class y = rng(), c = rng(), x, ys, q = 1, g = 1;
    y = y % (n - 3) + 2;
    c = c % (n - 1) + 1;
    uint64_t m = 128, r = 1;
    while (g == 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      for (uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        uint64_t lim = std::min(m, r - k);
        for (uint64_t i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        if (budget < lim) throw budget_error("factorization budget exceeded");
        budget -= lim;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      do {
        ys = (ys * ys + c) % n;
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
  throw budget_error("factorization: Pollard rho failed to split");
}

void factor_u64(uint64_t n, uint64_t& budget, uint64_t seed,
                std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (is_probable_prime_u64(n)) {
    out.emplace_back(static_cast<unsigned long>(n));
    return;
  }
  uint64_t d = pollard_brent_u64(n, budget, seed);
  factor_u64(d, budget, seed, out);
  factor_u64(n / d, budget, seed, out);
}

void factor_mpz(const mpz_class& n, uint64_t& budget, uint64_t seed,
                std::vector<mpz_class>& out) {
  if (n == 1) return;
  if (n.fits_ulong_p()) {
    factor_u64(n.get_ui(), budget, seed, out);
    return;
  }
  if (is_probable_prime(n, seed)) {
    out.push_back(n);
    return;
  }
  mpz_class d = pollard_brent_mpz(n, budget, seed);
  factor_mpz(d, budget, seed, out);
  factor_mpz(n / d, budget, seed, out);
}

}  // namespace

bool is_probable_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (uint64_t a : kWitnesses)
    if (!mr_witness_u64(n, a)) return false;
  return true;
}

bool is_probable_prime(const mpz_class& n, uint64_t seed) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_probable_prime_u64(n.get_ui());
  for (uint64_t p : kWitnesses)
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  for (uint64_t a : kWitnesses)
    if (!mr_witness_mpz(n, mpz_class(static_cast<unsigned long>(a))))
      return false;
  if (n < mr_deterministic_bound()) return true;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (int round = 0; round < 40; ++round) {
    mpz_class a = rng();
    a = a % (n - 3) + 2;
    if (!mr_witness_mpz(n, a)) return false;
  }
  return true;
}

Factorization factorize(const mpz_class& n, uint64_t budget, uint64_t seed) {
  if (n == 0) throw domain_error("factorize: n must be nonzero");
  Factorization out;
  mpz_class m = abs(n);
  if (m == 1) {
    out.verified = true;
    return out;
  }
  for (uint64_t p : trial_primes()) {
    if (mpz_class(m) < mpz_class(static_cast<unsigned long>(p)) *
                           static_cast<unsigned long>(p))
      break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.primes.emplace_back(static_cast<unsigned long>(p));
      m /= static_cast<unsigned long>(p);
    }
  }
  if (m > 1) factor_mpz(m, budget, seed, out.primes);
  std::sort(out.primes.begin(), out.primes.end());
  mpz_class check = 1;
  for (const mpz_class& p : out.primes) check *= p;
  out.verified = (check == abs(n));
  return out;
}

int omega_with_multiplicity(const mpz_class& n, uint64_t budget,
                            uint64_t seed) {
  return static_cast<int>(factorize(n, budget, seed).primes.size());
}

}  // namespace polysieve
