#include "bernden/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bernden {

bool PrimeSet::contains(uint64_t p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

Int PrimeSet::product() const {
    Int v = 1;
    for (uint64_t p : primes) {
        mpz_mul_ui(v.get_mpz_t(), v.get_mpz_t(), p);
    }
    return v;
}

uint64_t PrimeSet::lambda() const {
    uint64_t l = 1;
    for (uint64_t p : primes) l = lcm_u64(l, p - 1);
    return l;
}

std::string PrimeSet::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < primes.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(primes[i]);
    }
    s += '}';
    return s;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint64_t lcm_u64(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    uint64_t q = a / gcd_u64(a, b);
    if (b > UINT64_MAX / q) throw std::overflow_error("lcm_u64: result exceeds 64 bits");
    return q * b;
}

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((__uint128_t)a * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

namespace detail {

std::vector<uint64_t> odd_composite_bitmap(uint64_t limit) {
    uint64_t nbits = limit / 2 + 1;
    std::vector<uint64_t> bm((nbits + 63) / 64, 0);
    for (uint64_t p = 3; p * p <= limit; p += 2) {
        if (bm[(p >> 1) >> 6] & (uint64_t(1) << ((p >> 1) & 63))) continue;
        for (uint64_t q = p * p; q <= limit; q += 2 * p) {
            uint64_t i = q >> 1;
            bm[i >> 6] |= uint64_t(1) << (i & 63);
        }
    }
    return bm;
}

}  // namespace detail

std::vector<uint64_t> sieve_primes(uint64_t limit, uint64_t max_bytes) {
    if (limit < 2) return {};
    // bitmap plus an output estimate of pi(limit) ~ 1.26 * limit / ln(limit)
    uint64_t bitmap_bytes = limit / 16 + 16;
    double ln = std::max(2.0, std::log(static_cast<double>(limit)));
    uint64_t out_bytes = static_cast<uint64_t>(1.26 * limit / ln) * 8 + 64;
    if (bitmap_bytes + out_bytes > max_bytes)
        throw std::length_error("sieve_primes: limit " + std::to_string(limit) +
                                " exceeds memory budget of " + std::to_string(max_bytes) +
                                " bytes");
    auto bm = detail::odd_composite_bitmap(limit);
    std::vector<uint64_t> primes;
    primes.reserve(static_cast<size_t>(1.26 * limit / ln) + 16);
    primes.push_back(2);
    for (uint64_t p = 3; p <= limit; p += 2)
        if (!(bm[(p >> 1) >> 6] & (uint64_t(1) << ((p >> 1) & 63)))) primes.push_back(p);
    return primes;
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;
    // Strong-pseudoprime test with a witness set covering all 64-bit inputs.
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

constexpr uint64_t kTrialLimit = 1'000'000;

const std::vector<uint64_t>& trial_primes() {
    static const std::vector<uint64_t> primes = sieve_primes(kTrialLimit);
    return primes;
}

uint64_t brent_rho(uint64_t n) {
    // Deterministic parameter schedule; n is odd, composite, no factor <= 1e6.
    for (uint64_t c = 1;; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        uint64_t q = 1;
        int steps = 0;
        auto f = [&](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle without factor; bump c
            q = mulmod_u64(q, diff, n);
            if (++steps % 64 == 0) {
                d = gcd_u64(q, n);
                if (d == n) break;
            }
        }
        if (d == 1 || d == n) {
            d = gcd_u64(q, n);
            if (d > 1 && d < n) return d;
            continue;
        }
        return d;
    }
}

void factor_recursive(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = brent_rho(n);
    factor_recursive(d, out);
    factor_recursive(n / d, out);
}

}  // namespace

Factorization factorize(uint64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    f.value = n;
    uint64_t rem = n;
    for (uint64_t p : trial_primes()) {
        if (p * p > rem) break;
        if (rem % p == 0) {
            uint32_t e = 0;
            do {
                rem /= p;
                ++e;
            } while (rem % p == 0);
            f.factors.emplace_back(p, e);
        }
    }
    if (rem > 1) {
        if (rem <= kTrialLimit * kTrialLimit || is_prime(rem)) {
            // No prime factor <= sqrt(rem) below 1e6 means rem is prime here.
            f.factors.emplace_back(rem, 1);
        } else {
            std::vector<uint64_t> big;
            factor_recursive(rem, big);
            std::sort(big.begin(), big.end());
            for (size_t i = 0; i < big.size();) {
                size_t j = i;
                while (j < big.size() && big[j] == big[i]) ++j;
                f.factors.emplace_back(big[i], static_cast<uint32_t>(j - i));
                i = j;
            }
        }
    }
    return f;
}

std::vector<uint64_t> divisors(uint64_t n) {
    Factorization f = factorize(n);
    std::vector<uint64_t> ds{1};
    for (const auto& [p, e] : f.factors) {
        size_t base = ds.size();
        uint64_t pw = 1;
        for (uint32_t k = 1; k <= e; ++k) {
            pw *= p;
            for (size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pw);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

uint64_t carmichael_lambda(uint64_t n) {
    if (n < 1) throw std::invalid_argument("carmichael_lambda: n must be >= 1");
    uint64_t l = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        uint64_t comp;
        if (p == 2) {
            if (e == 1) comp = 1;
            else if (e == 2) comp = 2;
            else comp = uint64_t(1) << (e - 2);
        } else {
            comp = p - 1;
            for (uint32_t k = 1; k < e; ++k) comp *= p;
        }
        l = lcm_u64(l, comp);
    }
    return l;
}

uint32_t valuation(uint64_t n, uint64_t r) {
    if (n < 1) throw std::invalid_argument("valuation: n must be >= 1");
    if (!is_prime(r)) throw std::invalid_argument("valuation: r must be prime");
    uint32_t e = 0;
    while (n % r == 0) {
        n /= r;
        ++e;
    }
    return e;
}

}  // namespace bernden
