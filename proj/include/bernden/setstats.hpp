#ifndef BERNDEN_SETSTATS_HPP
#define BERNDEN_SETSTATS_HPP

#include <cstdint>
#include <vector>

#include "bernden/denom_sieve.hpp"
#include "bernden/types.hpp"

namespace bernden {

struct CountingReport {
    uint64_t bound = 0;
    uint64_t count = 0;
    double reference = 0.0;  // pi(bound) or f(bound), per the operation
    double ratio = 0.0;      // count / reference
};

// 1 - (1 + ln ln 2)/ln 2 = 0.08607133205593431...
double erdos_tenenbaum_ford_beta();

// f(x) = x / ((ln x)^beta sqrt(ln ln x)), the growth reference for the count
// of least subscripts.  Needs x >= 16 so ln ln x is comfortably positive.
double first_subscript_reference(double x);

// pi(x) by bitmap.
uint64_t prime_count(uint64_t x);

// d is a Bernoulli denominator iff d is even, > 2, squarefree, and
// D_{lambda(d)} = d.  The PrimeSet overload takes d by its (distinct) prime
// factors, for values past 64 bits.
bool is_bernoulli_denominator(uint64_t d);
bool is_bernoulli_denominator(const PrimeSet& prime_set);

// n is a least subscript iff n is even and lambda(D_n) = n.
bool is_first_subscript(uint64_t n);

// Least subscripts <= x, ascending, by direct per-n T-set evaluation.
// Fine for small x; the counting functions below use the sieve instead.
std::vector<uint64_t> first_subscripts_upto(uint64_t x);

// All Bernoulli denominators <= x, ascending (even squarefree multiples
// of 6 filtered through the D_{lambda(d)} = d test).
std::vector<uint64_t> denominators_upto(uint64_t x);

// Count of least subscripts at each checkpoint (ascending, all >= 16,
// max <= cfg.limit); reference f(bound).
std::vector<CountingReport> count_first_subscripts(const SieveConfig& cfg,
                                                   const std::vector<uint64_t>& checkpoints,
                                                   const std::string& checkpoint_file = {});
CountingReport count_first_subscripts(uint64_t x);

// Count of denominators at each bound (ascending, all >= 6); reference pi(bound).
std::vector<CountingReport> count_denominators(const std::vector<uint64_t>& bounds);
CountingReport count_denominators(uint64_t x);

struct PartitionCell {
    uint64_t target = 0;  // candidate cofactor d
    uint64_t count = 0;   // odd primes p <= limit with D_{p-1} = d*p
    double fraction = 0.0;  // count / pi(limit)
};

// Sizes of the prime classes {p : D_{p-1}/p = d} for each target d (even).
// Digest-matched via the sieve, then confirmed by exact cofactor comparison.
// cfg.limit bounds the primes; the sieve itself runs over subscripts p-1.
std::vector<PartitionCell> partition_counts(const SieveConfig& cfg,
                                            const std::vector<uint64_t>& targets,
                                            const std::string& checkpoint_file = {});
std::vector<PartitionCell> partition_counts(uint64_t x, const std::vector<uint64_t>& targets);

// Count of odd primes p <= x with lambda(d_p) = p-1, i.e. whose cofactor
// d_p is not itself a denominator (for p >= 5; d_3 = 2 is degenerate and
// fails lambda(d_3) = p-1, so it is never counted).  Reference pi(x).
CountingReport count_cofactor_not_denominator(uint64_t x);

struct SplitReport {
    uint64_t bound = 0;  // on d+1
    uint64_t composite_count = 0;
    uint64_t prime_count = 0;
    double composite_fraction = 0.0;
    double prime_fraction = 0.0;
};

// Partition of {d denominator : d+1 <= x} by the primality of d+1.  x >= 7.
SplitReport d_plus_one_split(uint64_t x);

struct WitnessNotInD {
    uint64_t q = 0;  // q = 3 mod 4, q > 3, prime
    uint64_t p = 0;  // p = 2q-1, prime, <= x
    Int d_p;         // cofactor, verified not a denominator
    uint64_t lambda_d_p = 0;  // equals p-1 for every emitted row
};

// Primes p = 2q-1 <= x with q = 3 mod 4, q > 3 prime; each row is verified
// to satisfy lambda(d_p) = p-1 before being returned.
std::vector<WitnessNotInD> witness_not_in_denominators(uint64_t x);

struct WitnessInD {
    uint64_t r = 0;  // r, q = 2r+1, p = 6q+1 all prime
    uint64_t q = 0;
    uint64_t p = 0;           // <= x
    uint64_t lambda_p_minus_1 = 0;  // equals 2r
    uint64_t denominator_2r = 0;    // equals p-1, so p-1 is a denominator
};

// Chain primes r -> q=2r+1 -> p=6q+1 <= x; each row verified to satisfy
// lambda(p-1) = 2r and D_{2r} = p-1.  x >= 43, so the list is never empty.
std::vector<WitnessInD> witness_in_denominators(uint64_t x);

// p <= x with 2p+1 also prime (p = 2 included).
std::vector<uint64_t> germain_primes(uint64_t x);

}  // namespace bernden

#endif
