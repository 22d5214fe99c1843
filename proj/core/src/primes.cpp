#include "polysieve/primes.hpp"

#include <algorithm>
#include <cmath>

#include "polysieve/errors.hpp"
#include "polysieve/parallel.hpp"

namespace polysieve {

std::vector<uint64_t> primes_up_to(uint64_t n) {
  std::vector<uint64_t> primes;
  if (n < 2) return primes;
  std::vector<char> is_prime(n + 1, 1);
  is_prime[0] = is_prime[1] = 0;
  for (uint64_t i = 2; i * i <= n; ++i)
    if (is_prime[i])
      for (uint64_t j = i * i; j <= n; j += i) is_prime[j] = 0;
  for (uint64_t i = 2; i <= n; ++i)
    if (is_prime[i]) primes.push_back(i);
  return primes;
}

void for_primes_in_segment(uint64_t lo, uint64_t hi,
                           const std::vector<uint64_t>& base,
                           const std::function<void(uint64_t)>& fn) {
  if (hi < 2 || lo > hi) return;
  lo = std::max<uint64_t>(lo, 2);
  std::vector<char> seg(hi - lo + 1, 1);
  for (uint64_t p : base) {
    if (p * p > hi) break;
    uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (uint64_t j = start; j <= hi; j += p) seg[j - lo] = 0;
  }
  for (uint64_t v = lo; v <= hi; ++v)
    if (seg[v - lo]) fn(v);
}

void for_primes_in(uint64_t lo, uint64_t hi,
                   const std::function<void(uint64_t)>& fn) {
  if (hi < 2 || lo > hi) return;
  const uint64_t root = static_cast<uint64_t>(std::sqrt(double(hi))) + 1;
  const std::vector<uint64_t> base = primes_up_to(root);
  const uint64_t seg = kPrimeBlockSize;
  for (uint64_t s = std::max<uint64_t>(lo, 2); s <= hi; s += seg) {
    uint64_t e = std::min(hi, s + seg - 1);
    for_primes_in_segment(s, e, base, fn);
    if (e == hi) break;
  }
}

uint64_t count_primes_in(uint64_t lo, uint64_t hi) {
  uint64_t n = 0;
  for_primes_in(lo, hi, [&](uint64_t) { ++n; });
  return n;
}

std::size_t prime_block_count(uint64_t lo, uint64_t hi) {
  if (hi < lo) return 0;
  return static_cast<std::size_t>((hi - lo) / kPrimeBlockSize) + 1;
}

void for_prime_blocks(
    uint64_t lo, uint64_t hi,
    const std::function<void(std::size_t, uint64_t, uint64_t)>& block_fn,
    std::size_t* block_count_out) {
  if (hi < 2 || lo > hi) {
    if (block_count_out) *block_count_out = 0;
    return;
  }
  const std::size_t blocks = prime_block_count(lo, hi);
  if (block_count_out) *block_count_out = blocks;
  parallel_for(blocks, [&](std::size_t b) {
    const uint64_t blo = lo + b * kPrimeBlockSize;
    const uint64_t bhi = std::min(hi, blo + kPrimeBlockSize - 1);
    block_fn(b, blo, bhi);
  });
}

}  // namespace polysieve
