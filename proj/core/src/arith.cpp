#include "polysieve/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polysieve/errors.hpp"
#include "polysieve/factorization.hpp"
#include "polysieve/parallel.hpp"
#include "polysieve/primes.hpp"

namespace polysieve {

namespace {

constexpr uint64_t kMaxBruteModulus = 10'000'000;
constexpr uint64_t kBrutePrimeBound = 211;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// ---- F_p[x] helpers (dense, ascending coefficients) ----

using Poly = std::vector<uint64_t>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul_mod(const Poly& a, const Poly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  return c;
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

// a mod m (in place), m monic-scaled on the fly.
void reduce_mod_poly(Poly& a, const Poly& m, uint64_t p) {
  const size_t dm = m.size() - 1;
  const uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    uint64_t c = mulmod(a.back(), lead_inv, p);
    size_t shift = a.size() - 1 - dm;
    if (c != 0)
      for (size_t i = 0; i < m.size(); ++i) {
        uint64_t sub = mulmod(c, m[i], p);
        uint64_t& t = a[shift + i];
        t = (t + p - sub) % p;
      }
    a.pop_back();
    trim(a);
    if (a.empty()) return;
  }
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    reduce_mod_poly(a, b, p);
    std::swap(a, b);
  }
  return a;
}

// x^p mod m over F_p.
Poly xpow_mod(uint64_t p, const Poly& m, uint64_t p_mod) {
  Poly result{1};  // 1
  Poly base{0, 1};  // x
  reduce_mod_poly(base, m, p_mod);
  uint64_t e = p;
  while (e) {
    if (e & 1) {
      result = mul_mod(result, base, p_mod);
      reduce_mod_poly(result, m, p_mod);
    }
    e >>= 1;
    if (e) {
      base = mul_mod(base, base, p_mod);
      reduce_mod_poly(base, m, p_mod);
    }
  }
  return result;
}

// Product polynomial H with mpz coefficients.
std::vector<mpz_class> product_coeffs(const PolynomialSystem& H) {
  std::vector<mpz_class> prod{1};
  for (const Polynomial& h : H.factors) {
    std::vector<mpz_class> next(prod.size() + h.coeffs.size() - 1, mpz_class(0));
    for (size_t i = 0; i < prod.size(); ++i)
      for (size_t j = 0; j < h.coeffs.size(); ++j)
        next[i + j] += prod[i] * h.coeffs[j];
    prod = std::move(next);
  }
  return prod;
}

Poly reduce_product(const std::vector<mpz_class>& coeffs, uint64_t p) {
  Poly out(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    long r = mpz_fdiv_ui(coeffs[i].get_mpz_t(), p);
    out[i] = static_cast<uint64_t>(r);
  }
  trim(out);
  return out;
}

long count_roots_mod_prime(const Poly& hbar, uint64_t p) {
  if (hbar.empty()) return static_cast<long>(p);  // zero polynomial
  if (hbar.size() == 1) return 0;                 // nonzero constant
  Poly xp = xpow_mod(p, hbar, p);
  // s = x^p - x mod hbar
  Poly s = xp;
  if (s.size() < 2) s.resize(2, 0);
  s[1] = (s[1] + p - 1) % p;
  trim(s);
  Poly gcd = poly_gcd(hbar, s, p);
  return gcd.empty() ? 0 : static_cast<long>(gcd.size()) - 1;
}

long brute_roots_mod(const PolynomialSystem& H, uint64_t d, int mode) {
  // mode 0: H(a)=0; mode 1: additionally (a,d)=1; mode 2: aH(a)=0.
  std::vector<std::vector<uint64_t>> reds;
  reds.reserve(H.factors.size());
  for (const Polynomial& h : H.factors) reds.push_back(reduced_coeffs(h, d));
  long count = 0;
  for (uint64_t a = 0; a < d; ++a) {
    uint64_t prod = 1;
    for (const auto& rc : reds) {
      prod = mulmod(prod, eval_mod(rc, a, d), d);
      if (prod == 0) break;
    }
    switch (mode) {
      case 0:
        count += prod == 0;
        break;
      case 1:
        count += prod == 0 && std::gcd(a == 0 ? d : a, d) == 1;
        break;
      default:
        count += mulmod(a, prod, d) == 0;
        break;
    }
  }
  return count;
}

void check_modulus(uint64_t d) {
  if (d < 1 || d > kMaxBruteModulus)
    throw domain_error("root count: modulus must lie in [1, 1e7]");
}

}  // namespace

long rho(const PolynomialSystem& H, uint64_t d) {
  check_modulus(d);
  if (d == 1) return 1;
  return brute_roots_mod(H, d, 0);
}

long rho1(const PolynomialSystem& H, uint64_t d) {
  check_modulus(d);
  if (d == 1) return 1;
  return brute_roots_mod(H, d, 1);
}

long rho2(const PolynomialSystem& H, uint64_t d) {
  check_modulus(d);
  if (d == 1) return 1;
  return brute_roots_mod(H, d, 2);
}

long rho_mod_prime(const PolynomialSystem& H, uint64_t p) {
  if (p < kBrutePrimeBound) return brute_roots_mod(H, p, 0);
  const std::vector<mpz_class> coeffs = product_coeffs(H);
  return count_roots_mod_prime(reduce_product(coeffs, p), p);
}

long rho1_mod_prime(const PolynomialSystem& H, uint64_t p) {
  long r = rho_mod_prime(H, p);
  return r - (mpz_fdiv_ui(H.H0.get_mpz_t(), p) == 0 ? 1 : 0);
}

HypothesisReport check_hypothesis(const PolynomialSystem& H) {
  HypothesisReport report;
  const uint64_t bound = static_cast<uint64_t>(H.g) * H.k + 1;
  for (uint64_t p : primes_up_to(bound)) {
    long r1 = rho1(H, p);
    report.checked.push_back({p, r1});
    if (r1 >= static_cast<long>(p) - 1) {
      report.pass = false;
      if (!report.failure) report.failure = HypothesisWitness{p, r1};
    }
  }
  return report;
}

DensitySums density_sum(const PolynomialSystem& H, uint64_t x) {
  if (x > 100'000'000)
    throw domain_error("density_sum: x above the 1e8 desk-scale cap");
  const std::vector<mpz_class> coeffs = product_coeffs(H);
  const std::size_t blocks = prime_block_count(2, x);
  struct Part {
    double s1_phi = 0, s1_p = 0, s2_p = 0;
  };
  std::vector<Part> parts(blocks);
  const std::vector<uint64_t> base =
      primes_up_to(static_cast<uint64_t>(std::sqrt(double(x))) + 1);

  for_prime_blocks(2, x, [&](std::size_t b, uint64_t lo, uint64_t hi) {
    Part& part = parts[b];
    for_primes_in_segment(lo, hi, base, [&](uint64_t p) {
      long r;
      if (p < kBrutePrimeBound)
        r = brute_roots_mod(H, p, 0);
      else
        r = count_roots_mod_prime(reduce_product(coeffs, p), p);
      const bool divides = mpz_fdiv_ui(H.H0.get_mpz_t(), p) == 0;
      const long r1 = r - (divides ? 1 : 0);
      const long r2 = r + (divides ? 0 : 1);  // roots of a H(a): {0} u roots(H)
      const double lg = std::log(double(p));
      part.s1_phi += double(r1) / double(p - 1) * lg;
      part.s1_p += double(r1) / double(p) * lg;
      part.s2_p += double(r2) / double(p) * lg;
    });
  });

  DensitySums out;
  out.x = double(x);
  for (const Part& part : parts) {
    out.rho1_over_phi += part.s1_phi;
    out.rho1_over_p += part.s1_p;
    out.rho2_over_p += part.s2_p;
  }
  return out;
}

namespace {

double sieve_product(const PolynomialSystem& H, uint64_t z, bool primed) {
  if (z > kMaxBruteModulus)
    throw domain_error("V product: z above the 1e7 desk-scale cap");
  if (z <= 2) return 1.0;
  const std::vector<mpz_class> coeffs = product_coeffs(H);
  const std::size_t blocks = prime_block_count(2, z - 1);
  std::vector<double> parts(blocks, 1.0);
  std::vector<uint64_t> bad(blocks, 0);
  const std::vector<uint64_t> base =
      primes_up_to(static_cast<uint64_t>(std::sqrt(double(z))) + 1);

  for_prime_blocks(2, z - 1, [&](std::size_t b, uint64_t lo, uint64_t hi) {
    double prod = 1.0;
    for_primes_in_segment(lo, hi, base, [&](uint64_t p) {
      if (bad[b]) return;
      long r;
      if (p < kBrutePrimeBound)
        r = brute_roots_mod(H, p, 0);
      else
        r = count_roots_mod_prime(reduce_product(coeffs, p), p);
      const bool divides = mpz_fdiv_ui(H.H0.get_mpz_t(), p) == 0;
      const long r1 = r - (divides ? 1 : 0);
      double factor;
      if (primed) {
        const long r2 = r + (divides ? 0 : 1);
        factor = 1.0 - double(r2) / double(p);
      } else {
        factor = 1.0 - double(r1) / double(p - 1);
      }
      if (factor <= 0) {
        bad[b] = p;
        return;
      }
      prod *= factor;
    });
    parts[b] = prod;
  });

  for (std::size_t b = 0; b < blocks; ++b)
    if (bad[b])
      throw domain_error("V product: degenerate prime p=" +
                         std::to_string(bad[b]) +
                         " makes a factor nonpositive");
  double out = 1.0;
  for (double part : parts) out *= part;
  return out;
}

}  // namespace

double V_product(const PolynomialSystem& H, uint64_t z) {
  return sieve_product(H, z, false);
}

double Vprime_product(const PolynomialSystem& H, uint64_t z) {
  return sieve_product(H, z, true);
}

double mertens_ratio(const PolynomialSystem& H, uint64_t z) {
  const double v = V_product(H, z);
  const double vp = Vprime_product(H, z);
  return vp * 1.7810724179901979852 * std::log(double(z)) / v;
}

IrreducibilityScreen irreducibility_screen(const PolynomialSystem& H) {
  IrreducibilityScreen out;
  for (const Polynomial& h : H.factors) {
    const std::string name = h.to_string();
    if (h.degree() < 1) {
      out.warnings.push_back("factor '" + name + "' is constant");
      out.suspicious = true;
      continue;
    }
    // Integer-root check (settles reducibility for monic k <= 3).
    const mpz_class& c0 = h.coeffs.front();
    if (c0 != 0 && h.coeffs.back() == 1 && abs(c0) < 1000000000) {
      std::vector<mpz_class> divisors{1};
      Factorization f = factorize(c0);
      for (const mpz_class& p : f.primes) {
        size_t n = divisors.size();
        for (size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * p);
      }
      std::sort(divisors.begin(), divisors.end());
      divisors.erase(std::unique(divisors.begin(), divisors.end()),
                     divisors.end());
      for (const mpz_class& d : divisors) {
        if (h.eval(d) == 0 || h.eval(-d) == 0) {
          out.warnings.push_back("factor '" + name +
                                 "' has an integer root; it is reducible");
          out.suspicious = true;
          break;
        }
      }
    }
    // An irreducible factor of degree >= 2 is root-free modulo a positive
    // density of primes; none below 500 is a strong reducibility signal.
    if (h.degree() >= 2) {
      PolynomialSystem single;
      single.factors = {h};
      single.g = 1;
      single.k = h.degree();
      single.H0 = h.coeffs.front();
      bool rootless = false;
      for (uint64_t p : primes_up_to(500)) {
        if (brute_roots_mod(single, p, 0) == 0) {
          rootless = true;
          break;
        }
      }
      if (!rootless) {
        out.warnings.push_back("factor '" + name +
                               "' has roots modulo every prime p <= 500; it "
                               "may be reducible");
        out.suspicious = true;
      }
    }
  }
  return out;
}

}  // namespace polysieve
