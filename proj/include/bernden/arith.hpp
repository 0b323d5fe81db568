#ifndef BERNDEN_ARITH_HPP
#define BERNDEN_ARITH_HPP

#include <cstdint>
#include <vector>

#include "bernden/types.hpp"

namespace bernden {

// Default memory budget for sieve allocations (bytes).
inline constexpr uint64_t kDefaultSieveBudget = uint64_t(1) << 31;

// All primes in [2, limit], ascending.  Throws std::length_error when the
// working set would exceed max_bytes.
std::vector<uint64_t> sieve_primes(uint64_t limit,
                                   uint64_t max_bytes = kDefaultSieveBudget);

// Deterministic over the whole 64-bit range (fixed strong-pseudoprime
// witness set, no probabilistic error).
bool is_prime(uint64_t n);

// n >= 1.  Trial division by sieved primes, then a Brent-cycle rho fallback
// so the function stays total over 64 bits.
Factorization factorize(uint64_t n);

// All positive divisors of n, ascending.
std::vector<uint64_t> divisors(uint64_t n);

// Carmichael lambda.  lambda(2)=1, lambda(4)=2, lambda(2^k)=2^(k-2) for k>=3,
// lambda(p^k)=p^(k-1)(p-1) for odd p; lcm across prime powers.
uint64_t carmichael_lambda(uint64_t n);

// Largest e with r^e | n.  r must be prime, n >= 1.
uint32_t valuation(uint64_t n, uint64_t r);

uint64_t gcd_u64(uint64_t a, uint64_t b);
// Throws std::overflow_error if the lcm does not fit 64 bits.
uint64_t lcm_u64(uint64_t a, uint64_t b);

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m);

namespace detail {
// Bitmap of odd composites: bit i set means 2i+1 is composite (i >= 1).
// Shared by sieve_primes and the bulk denominator sieve.
std::vector<uint64_t> odd_composite_bitmap(uint64_t limit);

inline bool bitmap_is_prime(const std::vector<uint64_t>& bm, uint64_t n) {
    if (n == 2) return true;
    if (n < 2 || (n & 1) == 0) return false;
    uint64_t i = n >> 1;
    return (bm[i >> 6] & (uint64_t(1) << (i & 63))) == 0;
}
}  // namespace detail

}  // namespace bernden

#endif
