#ifndef POLYSIEVE_PRIMES_HPP
#define POLYSIEVE_PRIMES_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace polysieve {

// Primes <= n by a simple sieve of Eratosthenes.
std::vector<uint64_t> primes_up_to(uint64_t n);

// Visit primes in [lo, hi] in ascending order (segmented sieve).
void for_primes_in(uint64_t lo, uint64_t hi,
                   const std::function<void(uint64_t)>& fn);

uint64_t count_primes_in(uint64_t lo, uint64_t hi);

// Segment sieve with caller-provided base primes (must reach sqrt(hi)).
void for_primes_in_segment(uint64_t lo, uint64_t hi,
                           const std::vector<uint64_t>& base,
                           const std::function<void(uint64_t)>& fn);

// Partition [lo, hi] into fixed blocks, map each block's primes through
// `block_fn` concurrently, then combine the per-block results in ascending
// block order.  The fixed blocking makes the reduction independent of the
// worker count.
void for_prime_blocks(
    uint64_t lo, uint64_t hi,
    const std::function<void(std::size_t /*block*/, uint64_t /*block_lo*/,
                             uint64_t /*block_hi*/)>& block_fn,
    std::size_t* block_count_out = nullptr);

constexpr uint64_t kPrimeBlockSize = 1 << 21;

std::size_t prime_block_count(uint64_t lo, uint64_t hi);

}  // namespace polysieve

#endif
