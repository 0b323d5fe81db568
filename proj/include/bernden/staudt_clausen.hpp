#ifndef BERNDEN_STAUDT_CLAUSEN_HPP
#define BERNDEN_STAUDT_CLAUSEN_HPP

#include <cstdint>
#include <vector>

#include "bernden/types.hpp"

namespace bernden {

// Default cap for the Bernoulli recurrence; cost grows quadratically.
inline constexpr uint32_t kBernoulliOracleCap = 512;

// T_m = {p prime : p-1 | m}.  {2} for odd m; contains 3 iff m is even.
PrimeSet t_class(uint64_t m);

// Bernoulli denominator D_n = prod T_n for even n >= 2; squarefree, 6 | D_n.
// Throws std::domain_error for odd or nonpositive subscripts.
Denom denominator(uint64_t n);

// The unique rational in [0,1) congruent to B_n mod 1, exact.  Its reduced
// denominator equals denominator(n).value.
Rational bernoulli_frac(uint64_t n);

// Exact B_n via the recurrence sum_{j=0}^{n} C(n+1,j) B_j = 0, B_0 = 1.
// Independent of the T-set route; used as a verification oracle.
// Throws std::length_error when n exceeds cap.
Rational bernoulli_oracle(uint32_t n, uint32_t cap = kBernoulliOracleCap);

// All of B_0..B_n in one pass.
std::vector<Rational> bernoulli_table(uint32_t n, uint32_t cap = kBernoulliOracleCap);

// d_p = D_{p-1}/p for an odd prime p: the cofactor of p in the first
// denominator it divides.  Even and squarefree.
Denom denominator_cofactor(uint64_t p);

}  // namespace bernden

#endif
