#include "bernden/denom_sieve.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "bernden/arith.hpp"
#include "bernden/staudt_clausen.hpp"

namespace bernden {

namespace {

inline uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

}  // namespace

void ClassKey::fold(uint64_t p) {
    lo = mix64(lo ^ (p * 0x9E3779B97F4A7C15ull));
    hi = mix64(hi + (p * 0xC2B2AE3D27D4EB4Full));
}

ClassKey ClassKey::of(const PrimeSet& t) {
    ClassKey k;
    for (uint64_t p : t.primes) k.fold(p);
    return k;
}

void SieveConfig::validate() const {
    if (limit < 2) throw std::invalid_argument("sieve: limit must be >= 2");
    if (segment_size < 2 || segment_size % 2 != 0)
        throw std::invalid_argument("sieve: segment_size must be even and >= 2");
    if (workers < 1) throw std::invalid_argument("sieve: workers must be >= 1");
    if (limit > uint64_t(UINT32_MAX) - 1)
        throw std::length_error("sieve: limit beyond supported range (needs > 32-bit base primes)");
    // bitmap + base primes + per-worker slot state (24 bytes each)
    double ln = std::max(2.0, std::log(static_cast<double>(limit)));
    uint64_t est = limit / 16 + static_cast<uint64_t>(1.26 * limit / ln) * 4 +
                   uint64_t(workers) * segment_size * 24;
    if (est > memory_budget)
        throw std::length_error("sieve: estimated working set " + std::to_string(est) +
                                " bytes exceeds memory budget " + std::to_string(memory_budget) +
                                "; reduce segment_size or limit");
}

namespace {

// T_n for every even n always contains 2 and 3, so both are pre-folded and
// the running lambda starts at lcm(1,2) = 2.
ClassKey base_key() {
    ClassKey k;
    k.fold(2);
    k.fold(3);
    return k;
}

std::vector<uint32_t> base_primes_from_5(uint64_t limit) {
    // primes p with p-1 <= limit, i.e. p <= limit+1, skipping 2 and 3
    uint64_t top = limit + 1;
    auto bm = detail::odd_composite_bitmap(top);
    std::vector<uint32_t> primes;
    double ln = std::max(2.0, std::log(static_cast<double>(top)));
    primes.reserve(static_cast<size_t>(1.26 * top / ln) + 16);
    for (uint64_t p = 5; p <= top; p += 2)
        if (!(bm[(p >> 1) >> 6] & (uint64_t(1) << ((p >> 1) & 63)))) primes.push_back(static_cast<uint32_t>(p));
    return primes;
}

void compute_segment(const std::vector<uint32_t>& primes, uint64_t lo, uint64_t hi,
                     std::vector<ClassKey>& keys, std::vector<uint64_t>& lams) {
    size_t nslots = static_cast<size_t>((hi - lo) / 2 + 1);
    keys.assign(nslots, base_key());
    lams.assign(nslots, 2);
    for (uint32_t p : primes) {
        uint64_t step = uint64_t(p) - 1;  // even, >= 4
        if (step > hi) break;
        uint64_t m = ((lo + step - 1) / step) * step;
        for (; m <= hi; m += step) {
            size_t i = static_cast<size_t>((m - lo) >> 1);
            keys[i].fold(p);
            lams[i] = lams[i] / gcd_u64(lams[i], step) * step;
        }
    }
}

// Sieve over even subscripts in [start, cfg.limit]; emission strictly ascending.
void run_range(const SieveConfig& cfg, uint64_t start, const DenomEmit& emit) {
    cfg.validate();
    if (start < 2) start = 2;
    if (start % 2 != 0) throw std::invalid_argument("sieve: start must be even");
    if (start > cfg.limit) return;

    const auto primes = base_primes_from_5(cfg.limit);
    const uint64_t span_evens = (cfg.limit - start) / 2 + 1;
    const uint64_t nsegs = (span_evens + cfg.segment_size - 1) / cfg.segment_size;
    const unsigned nworkers = static_cast<unsigned>(std::min<uint64_t>(cfg.workers, nsegs));

    auto seg_bounds = [&](uint64_t s) {
        uint64_t lo = start + 2 * s * cfg.segment_size;
        uint64_t hi = std::min(cfg.limit, lo + 2 * (cfg.segment_size - 1));
        return std::pair{lo, hi};
    };
    auto emit_segment = [&](uint64_t lo, const std::vector<ClassKey>& keys,
                            const std::vector<uint64_t>& lams) {
        DenomRecord rec;
        for (size_t i = 0; i < keys.size(); ++i) {
            rec.n = lo + 2 * i;
            rec.key = keys[i];
            rec.lambda = lams[i];
            emit(rec);
        }
    };

    if (nworkers <= 1) {
        std::vector<ClassKey> keys;
        std::vector<uint64_t> lams;
        for (uint64_t s = 0; s < nsegs; ++s) {
            auto [lo, hi] = seg_bounds(s);
            compute_segment(primes, lo, hi, keys, lams);
            emit_segment(lo, keys, lams);
        }
        return;
    }

    // Workers claim segments; a sequencer releases them in ascending order so
    // the stream is deterministic for any worker count.
    std::atomic<uint64_t> next{0};
    std::mutex mu;
    std::condition_variable cv;
    uint64_t release = 0;
    std::exception_ptr failure;

    auto work = [&]() {
        std::vector<ClassKey> keys;
        std::vector<uint64_t> lams;
        for (;;) {
            uint64_t s = next.fetch_add(1);
            if (s >= nsegs) return;
            auto [lo, hi] = seg_bounds(s);
            try {
                compute_segment(primes, lo, hi, keys, lams);
            } catch (...) {
                std::lock_guard lk(mu);
                if (!failure) failure = std::current_exception();
                cv.notify_all();
                return;
            }
            std::unique_lock lk(mu);
            cv.wait(lk, [&] { return release == s || failure; });
            if (failure) return;
            try {
                emit_segment(lo, keys, lams);
            } catch (...) {
                if (!failure) failure = std::current_exception();
                cv.notify_all();
                return;
            }
            ++release;
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (unsigned w = 0; w < nworkers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

void sieve_denominators(const SieveConfig& cfg, const DenomEmit& emit) {
    run_range(cfg, 2, emit);
}

void sieve_denominators_checkpointed(const SieveConfig& cfg, const std::string& path,
                                     const DenomEmit& emit) {
    if (path.empty()) {
        sieve_denominators(cfg, emit);
        return;
    }
    cfg.validate();
    std::optional<uint64_t> last = checkpoint::replay(path, cfg.limit, emit);
    uint64_t begin = last ? *last + 2 : 2;
    if (begin > cfg.limit) return;
    checkpoint::Writer writer(path);
    run_range(cfg, begin, [&](const DenomRecord& rec) {
        writer.append(rec);
        emit(rec);
    });
    writer.flush();
}

std::vector<ClassReport> s_class_counts(const SieveConfig& cfg, uint64_t max_first,
                                        const std::vector<uint64_t>& checkpoints,
                                        const std::string& checkpoint_file) {
    if (checkpoints.empty()) throw std::invalid_argument("s_class_counts: no checkpoints");
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw std::invalid_argument("s_class_counts: checkpoints must ascend");
    if (checkpoints.back() > cfg.limit)
        throw std::invalid_argument("s_class_counts: checkpoint exceeds sieve limit");

    std::vector<ClassReport> reports;
    std::unordered_map<ClassKey, size_t, ClassKeyHash> index;
    std::vector<std::vector<uint64_t>> buckets;
    for (uint64_t f = 2; f <= max_first; f += 2) {
        PrimeSet t = t_class(f);
        if (t.lambda() != f) continue;  // f not in F
        ClassReport r;
        r.first = f;
        r.t_set = std::move(t);
        index.emplace(ClassKey::of(r.t_set), reports.size());
        reports.push_back(std::move(r));
        buckets.emplace_back(checkpoints.size(), 0);
    }

    const uint64_t top = checkpoints.back();
    sieve_denominators_checkpointed(cfg, checkpoint_file, [&](const DenomRecord& rec) {
        if (rec.n > top) return;
        auto it = index.find(rec.key);
        if (it == index.end()) return;
        size_t idx = it->second;
        size_t ci = static_cast<size_t>(
            std::lower_bound(checkpoints.begin(), checkpoints.end(), rec.n) - checkpoints.begin());
        ++buckets[idx][ci];
        if (rec.n != reports[idx].first && !reports[idx].second) reports[idx].second = rec.n;
    });

    for (size_t idx = 0; idx < reports.size(); ++idx) {
        uint64_t running = 0;
        for (size_t ci = 0; ci < checkpoints.size(); ++ci) {
            running += buckets[idx][ci];
            reports[idx].counts.emplace_back(checkpoints[ci], running);
        }
    }
    return reports;
}

ResidueReport residue_statistics(const SieveConfig& cfg, uint64_t first,
                                 const std::vector<uint64_t>& moduli,
                                 const std::string& checkpoint_file) {
    if (moduli.empty()) throw std::invalid_argument("residue_statistics: no moduli");
    for (uint64_t m : moduli)
        if (m == 0) throw std::invalid_argument("residue_statistics: modulus must be positive");
    PrimeSet t = t_class(first);
    if (first < 2 || first % 2 != 0 || t.lambda() != first)
        throw std::invalid_argument("residue_statistics: first=" + std::to_string(first) +
                                    " is not a least class element");

    ResidueReport rep;
    rep.first = first;
    for (uint64_t m : moduli) rep.moduli.push_back({m, std::vector<uint64_t>(m, 0)});
    const ClassKey key = ClassKey::of(t);

    sieve_denominators_checkpointed(cfg, checkpoint_file, [&](const DenomRecord& rec) {
        if (rec.key == key) {
            ++rep.total;
            for (auto& pm : rep.moduli) ++pm.class_counts[rec.n % pm.modulus];
        }
    });
    return rep;
}

std::vector<uint64_t> u_set(uint64_t n, uint64_t limit) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("u_set: n must be even and >= 2");
    std::vector<uint64_t> members;
    if (limit < n) return members;
    const PrimeSet t = t_class(n);
    const ClassKey key = ClassKey::of(t);
    const uint64_t lambda = t.lambda();
    SieveConfig cfg;
    cfg.limit = limit;
    sieve_denominators(cfg, [&](const DenomRecord& rec) {
        if (rec.n % n == 0 && rec.key == key && rec.lambda == lambda) members.push_back(rec.n);
    });
    return members;
}

std::vector<uint64_t> u_set_excluding(uint64_t n, uint64_t r, uint64_t limit) {
    if (!is_prime(r)) throw std::invalid_argument("u_set_excluding: r must be prime");
    std::vector<uint64_t> members;
    for (uint64_t x : u_set(n, limit))
        if ((x / n) % r != 0) members.push_back(x);
    return members;
}

PowerRun max_power_preserving_denominator(uint64_t n, uint64_t r, uint64_t max_exponent) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("max_power_preserving_denominator: n must be even and >= 2");
    if (!is_prime(r))
        throw std::invalid_argument("max_power_preserving_denominator: r must be prime");
    const PrimeSet t = t_class(n);
    PowerRun run;
    uint64_t v = n;
    for (uint64_t i = 1; i <= max_exponent; ++i) {
        if (v > UINT64_MAX / r) {
            run.range_exhausted = false;  // ran out of 64 bits before a verdict
            return run;
        }
        v *= r;
        // T-sets only grow with the subscript's divisors, so the first
        // mismatch settles every larger exponent.
        if (t_class(v) != t) return run;
        run.max_i = i;
    }
    return run;
}

}  // namespace bernden
