#include "polysieve/almost_prime.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "polysieve/arith.hpp"
#include "polysieve/errors.hpp"
#include "polysieve/factorization.hpp"
#include "polysieve/primes.hpp"
#include "polysieve/quadrature.hpp"

namespace polysieve {

double li(double x) {
  if (x < 2) throw domain_error("li: x must be >= 2");
  if (x == 2) return 0.0;
  const double tol = 1e-10 * std::max(1.0, x / std::log(x));
  return integrate([](double t) { return 1.0 / std::log(t); }, 2.0, x, tol);
}

namespace {

constexpr uint64_t kDeskScaleX = 10'000'000;

void require_desk_scale(uint64_t x) {
  if (x < 4 || x > kDeskScaleX)
    throw domain_error("prime window: x must lie in [4, 1e7]");
}

}  // namespace

EmpiricalReport count_almost_primes(const PolynomialSystem& H, uint64_t x,
                                    int r, uint64_t seed) {
  require_desk_scale(x);
  if (r < 0) throw domain_error("count_almost_primes: r must be >= 0");
  HypothesisReport hyp = check_hypothesis(H);
  if (!hyp.pass)
    throw domain_error(
        "count_almost_primes: H fails the coprime-root hypothesis at p=" +
        std::to_string(hyp.failure->p));

  struct Part {
    uint64_t primes = 0, almost = 0, verified = 0;
  };
  std::vector<Part> parts(prime_block_count(x + 1, 2 * x));
  const std::vector<uint64_t> base =
      primes_up_to(static_cast<uint64_t>(std::sqrt(double(2 * x))) + 1);
  std::string budget_failure;

  for_prime_blocks(x + 1, 2 * x, [&](std::size_t b, uint64_t lo, uint64_t hi) {
    Part& part = parts[b];
    for_primes_in_segment(lo, hi, base, [&](uint64_t p) {
      ++part.primes;
      int omega = 0;
      bool ok = true, zero = false;
      for (const Polynomial& h : H.factors) {
        mpz_class value = h.eval(mpz_class(static_cast<unsigned long>(p)));
        if (value == 0) {
          zero = true;  // p is an integer root; H(p) is not a P_r
          break;
        }
        try {
          Factorization f = factorize(value, uint64_t(1) << 26, seed);
          if (f.verified) ++part.verified;
          omega += static_cast<int>(f.primes.size());
        } catch (const budget_error& e) {
          ok = false;
          budget_failure = std::string(e.what()) + " at p=" + std::to_string(p);
          break;
        }
      }
      if (zero) {
        part.verified += H.factors.size();  // nothing to reconstruct
        return;
      }
      if (!ok) return;
      if (omega <= r) ++part.almost;
    });
  });
  if (!budget_failure.empty()) throw budget_error(budget_failure);

  EmpiricalReport rep;
  rep.x = x;
  rep.window_lo = x;
  rep.window_hi = 2 * x;
  rep.r = r;
  for (const Part& part : parts) {
    rep.prime_count += part.primes;
    rep.almost_prime_count += part.almost;
    rep.factorizations_verified += part.verified;
  }
  const double logx = std::log(double(x));
  rep.density_ratio = density_sum(H, x).rho1_over_phi / (H.g * logx);
  rep.normalized_count = double(rep.almost_prime_count) /
                         (double(x) / std::pow(logx, H.g + 1));
  return rep;
}

WeightedSumReport weighted_sum_W(const PolynomialSystem& H, uint64_t x, int r,
                                 double v, double u, uint64_t seed) {
  require_desk_scale(x);
  if (!(v > u && u > 0))
    throw domain_error("weighted_sum_W: need v > u > 0 so that z < y");
  WeightedSumReport rep;
  rep.X = li(double(x));
  rep.z = std::pow(rep.X, 1.0 / v);
  rep.y = std::pow(rep.X, 1.0 / u);
  rep.eta = r + 1 - double(H.g) * H.k * u;
  if (rep.eta <= 0)
    throw domain_error("weighted_sum_W: eta = r+1-gku must be positive");

  const double log_y = std::log(rep.y);
  struct Part {
    uint64_t survivors = 0, almost = 0;
    double W = 0;
  };
  std::vector<Part> parts(prime_block_count(x + 1, 2 * x));
  const std::vector<uint64_t> base =
      primes_up_to(static_cast<uint64_t>(std::sqrt(double(2 * x))) + 1);

  for_prime_blocks(x + 1, 2 * x, [&](std::size_t b, uint64_t lo, uint64_t hi) {
    Part& part = parts[b];
    for_primes_in_segment(lo, hi, base, [&](uint64_t p) {
      std::set<mpz_class> distinct;
      int omega = 0;
      bool zero = false;
      for (const Polynomial& h : H.factors) {
        mpz_class value = h.eval(mpz_class(static_cast<unsigned long>(p)));
        if (value == 0) {
          zero = true;
          break;
        }
        Factorization f = factorize(value, uint64_t(1) << 26, seed);
        omega += static_cast<int>(f.primes.size());
        for (const mpz_class& q : f.primes) distinct.insert(q);
      }
      if (zero) return;
      // Survivor iff no prime factor below z.
      for (const mpz_class& q : distinct)
        if (q < rep.z) return;
      ++part.survivors;
      if (omega <= r) ++part.almost;
      double inner = 0;
      for (const mpz_class& q : distinct) {
        const double qd = q.get_d();
        if (qd >= rep.z && qd < rep.y) inner += 1.0 - std::log(qd) / log_y;
      }
      part.W += rep.eta - inner;
    });
  });

  for (const Part& part : parts) {
    rep.survivors += part.survivors;
    rep.almost_prime_survivors += part.almost;
    rep.W += part.W;
  }
  rep.W_over_r_plus_1 = rep.W / (r + 1);
  return rep;
}

}  // namespace polysieve
