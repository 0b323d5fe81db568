#ifndef BERNDEN_TYPES_HPP
#define BERNDEN_TYPES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace bernden {

// Arbitrary-precision integer and exact reduced fraction.
using Int = mpz_class;
using Rational = mpq_class;

// Prime-power decomposition of a 64-bit integer, primes ascending.
struct Factorization {
    uint64_t value = 1;
    std::vector<std::pair<uint64_t, uint32_t>> factors;

    bool squarefree() const {
        for (const auto& [p, e] : factors)
            if (e > 1) return false;
        return true;
    }
};

// Sorted set of distinct primes.  Used both for T_m = {p : p-1 | m} and for
// the prime supports of squarefree denominators.
struct PrimeSet {
    std::vector<uint64_t> primes;  // strictly increasing

    bool contains(uint64_t p) const;
    // Product of the primes as a big integer.
    Int product() const;
    // lcm{p-1 : p in set}; 1 for the empty set.
    uint64_t lambda() const;
    // "{2,3,7}"
    std::string to_string() const;

    bool operator==(const PrimeSet&) const = default;
};

// A squarefree positive integer together with its prime support.
// Holds values D_n, d, and d_p; the big product and the prime list are kept
// side by side so callers can pick the cheaper representation.
struct Denom {
    Int value = 1;
    PrimeSet prime_set;

    bool operator==(const Denom&) const = default;
};

}  // namespace bernden

#endif
