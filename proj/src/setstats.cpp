#include "bernden/setstats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "bernden/arith.hpp"
#include "bernden/staudt_clausen.hpp"

namespace bernden {

double erdos_tenenbaum_ford_beta() {
    return 1.0 - (1.0 + std::log(std::log(2.0))) / std::log(2.0);
}

double first_subscript_reference(double x) {
    if (!(x >= 16.0)) throw std::invalid_argument("first_subscript_reference: x must be >= 16");
    double lx = std::log(x);
    return x / (std::pow(lx, erdos_tenenbaum_ford_beta()) * std::sqrt(std::log(lx)));
}

uint64_t prime_count(uint64_t x) {
    if (x < 2) return 0;
    auto bm = detail::odd_composite_bitmap(x);
    uint64_t count = 1;  // the prime 2
    for (uint64_t p = 3; p <= x; p += 2)
        if (detail::bitmap_is_prime(bm, p)) ++count;
    return count;
}

bool is_bernoulli_denominator(uint64_t d) {
    if (d <= 2 || d % 2 != 0 || d % 3 != 0) return false;
    Factorization f = factorize(d);
    if (!f.squarefree()) return false;
    uint64_t lambda = 1;
    for (auto [p, e] : f.factors) lambda = lcm_u64(lambda, p - 1);
    // lambda is even here (3 | d), so denominator() is applicable
    return denominator(lambda).value == Int(static_cast<unsigned long>(d));
}

bool is_bernoulli_denominator(const PrimeSet& prime_set) {
    if (!prime_set.contains(2) || !prime_set.contains(3)) return false;
    uint64_t lambda = prime_set.lambda();
    return denominator(lambda).prime_set == prime_set;
}

bool is_first_subscript(uint64_t n) {
    if (n < 2 || n % 2 != 0) return false;
    return t_class(n).lambda() == n;
}

std::vector<uint64_t> first_subscripts_upto(uint64_t x) {
    std::vector<uint64_t> out;
    for (uint64_t n = 2; n <= x; n += 2)
        if (t_class(n).lambda() == n) out.push_back(n);
    return out;
}

namespace {

// smallest prime factor for every n <= limit (spf[0] = spf[1] = 0)
std::vector<uint32_t> spf_table(uint64_t limit) {
    std::vector<uint32_t> spf(limit + 1, 0);
    for (uint64_t i = 2; i <= limit; i += 2) spf[i] = 2;
    for (uint64_t p = 3; p * p <= limit; p += 2) {
        if (spf[p] != 0) continue;
        for (uint64_t m = p; m <= limit; m += 2 * p)
            if (spf[m] == 0) spf[m] = static_cast<uint32_t>(p);
    }
    for (uint64_t n = 3; n <= limit; n += 2)
        if (spf[n] == 0) spf[n] = static_cast<uint32_t>(n);
    return spf;
}

// divisors of n, unsorted, via repeated spf extraction
void divisors_via_spf(uint64_t n, const std::vector<uint32_t>& spf,
                      std::vector<uint64_t>& out) {
    out.assign(1, 1);
    while (n > 1) {
        uint64_t p = spf[n];
        uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        size_t base = out.size();
        uint64_t pe = 1;
        for (uint32_t k = 1; k <= e; ++k) {
            pe *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pe);
        }
    }
}

// Denominators d <= x as (d, lambda(d)) pairs, ascending d.  Candidates are
// 6k with k coprime to 6 (anything else has a square factor); squarefreeness
// and the D_{lambda(d)} = d test run against spf/bitmap tables.
std::vector<std::pair<uint64_t, uint64_t>> denominator_list(uint64_t x) {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    if (x < 6) return out;
    auto spf = spf_table(x);
    auto bm = detail::odd_composite_bitmap(x + 2);
    std::vector<uint64_t> divs;
    for (uint64_t d = 6; d <= x; d += 6) {
        uint64_t k = d / 6;
        if (k % 2 == 0 || k % 3 == 0) continue;
        // factor d, reject square factors, accumulate lambda
        uint64_t m = d, lambda = 1;
        bool squarefree = true;
        while (m > 1) {
            uint64_t p = spf[m];
            m /= p;
            if (m % p == 0) {
                squarefree = false;
                break;
            }
            lambda = lambda / gcd_u64(lambda, p - 1) * (p - 1);
        }
        if (!squarefree) continue;
        // rebuild D_lambda and compare; bail once the product passes d
        divisors_via_spf(lambda, spf, divs);
        std::sort(divs.begin(), divs.end());
        uint64_t prod = 1;
        bool match = true;
        for (uint64_t e : divs) {
            if (e + 1 > x + 1 || !detail::bitmap_is_prime(bm, e + 1)) continue;
            if (prod > d / (e + 1)) {
                match = false;
                break;
            }
            prod *= e + 1;
        }
        if (match && prod == d) out.emplace_back(d, lambda);
    }
    return out;
}

}  // namespace

std::vector<uint64_t> denominators_upto(uint64_t x) {
    std::vector<uint64_t> out;
    for (auto [d, lambda] : denominator_list(x)) out.push_back(d);
    return out;
}

std::vector<CountingReport> count_first_subscripts(const SieveConfig& cfg,
                                                   const std::vector<uint64_t>& checkpoints,
                                                   const std::string& checkpoint_file) {
    if (checkpoints.empty()) throw std::invalid_argument("count_first_subscripts: no checkpoints");
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw std::invalid_argument("count_first_subscripts: checkpoints must ascend");
    if (checkpoints.front() < 16)
        throw std::invalid_argument("count_first_subscripts: checkpoints must be >= 16");
    if (checkpoints.back() > cfg.limit)
        throw std::invalid_argument("count_first_subscripts: checkpoint exceeds sieve limit");

    std::vector<uint64_t> buckets(checkpoints.size(), 0);
    sieve_denominators_checkpointed(cfg, checkpoint_file, [&](const DenomRecord& rec) {
        if (rec.n > checkpoints.back() || rec.lambda != rec.n) return;
        size_t ci = static_cast<size_t>(
            std::lower_bound(checkpoints.begin(), checkpoints.end(), rec.n) - checkpoints.begin());
        ++buckets[ci];
    });

    std::vector<CountingReport> reports;
    uint64_t running = 0;
    for (size_t i = 0; i < checkpoints.size(); ++i) {
        running += buckets[i];
        CountingReport r;
        r.bound = checkpoints[i];
        r.count = running;
        r.reference = first_subscript_reference(static_cast<double>(checkpoints[i]));
        r.ratio = static_cast<double>(running) / r.reference;
        reports.push_back(r);
    }
    return reports;
}

CountingReport count_first_subscripts(uint64_t x) {
    SieveConfig cfg;
    cfg.limit = x;
    return count_first_subscripts(cfg, {x}).front();
}

std::vector<CountingReport> count_denominators(const std::vector<uint64_t>& bounds) {
    if (bounds.empty()) throw std::invalid_argument("count_denominators: no bounds");
    if (!std::is_sorted(bounds.begin(), bounds.end()))
        throw std::invalid_argument("count_denominators: bounds must ascend");
    if (bounds.front() < 6) throw std::invalid_argument("count_denominators: bounds must be >= 6");

    auto denoms = denominators_upto(bounds.back());
    std::vector<CountingReport> reports;
    for (uint64_t b : bounds) {
        CountingReport r;
        r.bound = b;
        r.count = static_cast<uint64_t>(
            std::upper_bound(denoms.begin(), denoms.end(), b) - denoms.begin());
        r.reference = static_cast<double>(prime_count(b));
        r.ratio = static_cast<double>(r.count) / r.reference;
        reports.push_back(r);
    }
    return reports;
}

CountingReport count_denominators(uint64_t x) {
    return count_denominators(std::vector<uint64_t>{x}).front();
}

std::vector<PartitionCell> partition_counts(const SieveConfig& cfg,
                                            const std::vector<uint64_t>& targets,
                                            const std::string& checkpoint_file) {
    if (targets.empty()) throw std::invalid_argument("partition_counts: no targets");
    if (cfg.limit < 3) throw std::invalid_argument("partition_counts: limit must be >= 3");
    for (uint64_t d : targets)
        if (d < 2 || d % 2 != 0)
            throw std::invalid_argument("partition_counts: target " + std::to_string(d) +
                                        " is not even");

    // Every prime factor of d_p is < p, so the digest of T_{p-1} is the
    // target's digest folded with p itself.
    struct Target {
        uint64_t d;
        ClassKey base;
        uint64_t max_prime;
        uint64_t count = 0;
    };
    std::vector<Target> cells;
    for (uint64_t d : targets) {
        Factorization f = factorize(d);
        ClassKey key;
        uint64_t mx = 0;
        for (auto [p, e] : f.factors) {
            key.fold(p);
            mx = p;
        }
        cells.push_back({d, key, mx, 0});
    }

    SieveConfig run = cfg;
    run.limit = std::max<uint64_t>(2, cfg.limit - 1);  // subscripts are p-1
    auto bm = detail::odd_composite_bitmap(cfg.limit);
    sieve_denominators_checkpointed(run, checkpoint_file, [&](const DenomRecord& rec) {
        uint64_t p = rec.n + 1;
        if (p > cfg.limit || !detail::bitmap_is_prime(bm, p)) return;
        for (auto& cell : cells) {
            if (p <= cell.max_prime) continue;
            ClassKey k = cell.base;
            k.fold(p);
            if (!(k == rec.key)) continue;
            // digest hit: confirm with the exact cofactor
            if (denominator_cofactor(p).value == Int(static_cast<unsigned long>(cell.d)))
                ++cell.count;
        }
    });

    double pi_x = static_cast<double>(prime_count(cfg.limit));
    std::vector<PartitionCell> out;
    for (const auto& cell : cells)
        out.push_back({cell.d, cell.count, static_cast<double>(cell.count) / pi_x});
    return out;
}

std::vector<PartitionCell> partition_counts(uint64_t x, const std::vector<uint64_t>& targets) {
    SieveConfig cfg;
    cfg.limit = x;
    return partition_counts(cfg, targets);
}

CountingReport count_cofactor_not_denominator(uint64_t x) {
    if (x < 3) throw std::invalid_argument("count_cofactor_not_denominator: x must be >= 3");
    auto spf = spf_table(x);
    auto bm = detail::odd_composite_bitmap(x + 1);
    std::vector<uint64_t> divs;
    CountingReport r;
    r.bound = x;
    uint64_t primes_seen = 1;  // 2
    for (uint64_t p = 3; p <= x; p += 2) {
        if (!detail::bitmap_is_prime(bm, p)) continue;
        ++primes_seen;
        // lambda(d_p) = lcm of divisors e of p-1 with e+1 prime, e+1 != p;
        // each such lcm divides p-1, so it stays in 64 bits
        divisors_via_spf(p - 1, spf, divs);
        uint64_t lambda = 1;
        for (uint64_t e : divs) {
            if (e + 1 == p || !detail::bitmap_is_prime(bm, e + 1)) continue;
            lambda = lambda / gcd_u64(lambda, e) * e;
        }
        if (lambda == p - 1) ++r.count;
    }
    r.reference = static_cast<double>(primes_seen);
    r.ratio = static_cast<double>(r.count) / r.reference;
    return r;
}

SplitReport d_plus_one_split(uint64_t x) {
    if (x < 7) throw std::invalid_argument("d_plus_one_split: x must be >= 7");
    auto bm = detail::odd_composite_bitmap(x);
    SplitReport rep;
    rep.bound = x;
    for (uint64_t d : denominators_upto(x - 1)) {
        if (detail::bitmap_is_prime(bm, d + 1))
            ++rep.prime_count;
        else
            ++rep.composite_count;
    }
    double total = static_cast<double>(rep.prime_count + rep.composite_count);
    rep.composite_fraction = static_cast<double>(rep.composite_count) / total;
    rep.prime_fraction = static_cast<double>(rep.prime_count) / total;
    return rep;
}

std::vector<WitnessNotInD> witness_not_in_denominators(uint64_t x) {
    if (x < 3) throw std::invalid_argument("witness_not_in_denominators: x must be >= 3");
    std::vector<WitnessNotInD> out;
    auto bm = detail::odd_composite_bitmap(x);
    for (uint64_t q = 7; 2 * q - 1 <= x; q += 4) {
        if (!detail::bitmap_is_prime(bm, q)) continue;
        uint64_t p = 2 * q - 1;
        if (!detail::bitmap_is_prime(bm, p)) continue;
        WitnessNotInD w;
        w.q = q;
        w.p = p;
        Denom cof = denominator_cofactor(p);
        w.d_p = cof.value;
        w.lambda_d_p = cof.prime_set.lambda();
        if (w.lambda_d_p != p - 1)
            throw std::logic_error("witness_not_in_denominators: verification failed at p=" +
                                   std::to_string(p));
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<WitnessInD> witness_in_denominators(uint64_t x) {
    if (x < 43) throw std::invalid_argument("witness_in_denominators: x must be >= 43");
    std::vector<WitnessInD> out;
    auto bm = detail::odd_composite_bitmap(x);
    for (uint64_t r = 2; 12 * r + 7 <= x; ++r) {
        if (!detail::bitmap_is_prime(bm, r)) continue;
        uint64_t q = 2 * r + 1;
        if (!detail::bitmap_is_prime(bm, q)) continue;
        uint64_t p = 6 * q + 1;
        if (!detail::bitmap_is_prime(bm, p)) continue;
        WitnessInD w;
        w.r = r;
        w.q = q;
        w.p = p;
        w.lambda_p_minus_1 = carmichael_lambda(p - 1);
        Denom den = denominator(2 * r);
        if (w.lambda_p_minus_1 != 2 * r || den.value != Int(static_cast<unsigned long>(p - 1)))
            throw std::logic_error("witness_in_denominators: verification failed at p=" +
                                   std::to_string(p));
        w.denominator_2r = p - 1;
        out.push_back(w);
    }
    return out;
}

std::vector<uint64_t> germain_primes(uint64_t x) {
    std::vector<uint64_t> out;
    if (x < 2) return out;
    auto bm = detail::odd_composite_bitmap(2 * x + 1);
    out.push_back(2);  // 2*2+1 = 5
    for (uint64_t p = 3; p <= x; p += 2)
        if (detail::bitmap_is_prime(bm, p) && detail::bitmap_is_prime(bm, 2 * p + 1))
            out.push_back(p);
    return out;
}

}  // namespace bernden
