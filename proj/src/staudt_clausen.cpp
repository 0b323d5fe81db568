#include "bernden/staudt_clausen.hpp"

#include <stdexcept>
#include <string>

#include "bernden/arith.hpp"

namespace bernden {

PrimeSet t_class(uint64_t m) {
    if (m < 1) throw std::invalid_argument("t_class: m must be >= 1");
    PrimeSet t;
    for (uint64_t d : divisors(m)) {
        // divisors come out ascending, so the primes do too
        if (is_prime(d + 1)) t.primes.push_back(d + 1);
    }
    return t;
}

Denom denominator(uint64_t n) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("denominator: subscript must be even and >= 2, got " +
                                std::to_string(n));
    Denom d;
    d.prime_set = t_class(n);
    d.value = d.prime_set.product();
    return d;
}

Rational bernoulli_frac(uint64_t n) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("bernoulli_frac: subscript must be even and >= 2, got " +
                                std::to_string(n));
    Denom d = denominator(n);
    // B_n + sum 1/p is an integer, so B_n mod 1 = (D - (sum D/p mod D)) / D.
    Int s = 0;
    for (uint64_t p : d.prime_set.primes) {
        Int term;
        mpz_divexact_ui(term.get_mpz_t(), d.value.get_mpz_t(), p);
        s += term;
    }
    Int residue = s % d.value;
    Rational frac(d.value - residue, d.value);
    frac.canonicalize();  // already coprime; keeps the invariant explicit
    return frac;
}

std::vector<Rational> bernoulli_table(uint32_t n, uint32_t cap) {
    if (n > cap)
        throw std::length_error("bernoulli oracle: n=" + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (uint32_t m = 1; m <= n; ++m) {
        // sum_{j=0}^{m-1} C(m+1,j) B_j, with binomials updated in place
        Rational acc = 0;
        Int binom = 1;  // C(m+1, 0)
        for (uint32_t j = 0; j < m; ++j) {
            acc += Rational(binom) * b[j];
            binom *= m + 1 - j;
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), j + 1);
        }
        // binom is now C(m+1, m) = m+1
        b[m] = -acc / Rational(binom);
        b[m].canonicalize();
    }
    return b;
}

Rational bernoulli_oracle(uint32_t n, uint32_t cap) {
    return bernoulli_table(n, cap).back();
}

Denom denominator_cofactor(uint64_t p) {
    if (p < 3 || !is_prime(p))
        throw std::domain_error("denominator_cofactor: p must be an odd prime, got " +
                                std::to_string(p));
    Denom d = denominator(p - 1);
    Denom out;
    mpz_divexact_ui(out.value.get_mpz_t(), d.value.get_mpz_t(), p);
    out.prime_set.primes.reserve(d.prime_set.primes.size() - 1);
    for (uint64_t q : d.prime_set.primes)
        if (q != p) out.prime_set.primes.push_back(q);
    return out;
}

}  // namespace bernden
