// Acceptance gate: one criterion per command-line argument (01..11), all when
// none given.  Prints one PASS/FAIL line per criterion; nonzero exit on any
// failure or budget overrun.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iterator>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "bernden/arith.hpp"
#include "bernden/denom_sieve.hpp"
#include "bernden/setstats.hpp"
#include "bernden/staudt_clausen.hpp"

using namespace bernden;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::fprintf(stderr, "    check failed: %s\n", what.c_str());
    }
}

template <typename A, typename B>
void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == static_cast<A>(want))) {
        ++g_failures;
        std::fprintf(stderr, "    check failed: %s\n", what.c_str());
    }
}

// printed-table rounding: fixed decimals, leading zero stripped
std::string fixed_ratio(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s = buf;
    if (s.size() > 1 && s[0] == '0') s.erase(s.begin());
    return s;
}

unsigned pool_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : std::min(hw, 4u);
}

// ---- 01: recurrence oracle vs product formula, even n <= 100 --------------

Rational fractional_part(const Rational& b) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
    Rational f = b - Rational(fl);
    f.canonicalize();
    return f;
}

void crit01() {
    auto table = bernoulli_table(100);
    for (uint64_t n = 2; n <= 100; n += 2) {
        const Rational& b = table[n];
        expect_eq(Int(b.get_den()), denominator(n).value,
                  "reduced oracle denominator at n=" + std::to_string(n));
        expect(fractional_part(b) == bernoulli_frac(n),
               "fractional part at n=" + std::to_string(n));
    }
}

// ---- 02/03: class-count rows --------------------------------------------

struct CountRow {
    uint64_t first, second, count;
};

// (first, second element, class size at 1e5) for every class with first <= 112
constexpr CountRow kRows1e5[] = {
    {2, 14, 7992},    {4, 8, 3423},     {6, 114, 1371},  {10, 50, 1080},
    {12, 24, 495},    {16, 32, 713},    {18, 54, 397},   {20, 340, 289},
    {22, 154, 566},   {28, 56, 309},    {30, 1770, 138}, {36, 3924, 72},
    {40, 6680, 92},   {42, 294, 124},   {44, 484, 160},  {46, 322, 261},
    {48, 10128, 26},  {52, 104, 164},   {58, 406, 235},  {60, 13620, 21},
    {66, 3894, 77},   {70, 350, 83},    {72, 12024, 12}, {78, 1014, 71},
    {80, 160, 39},    {82, 574, 150},   {84, 168, 16},   {88, 968, 53},
    {90, 14670, 17},  {92, 184, 116},   {96, 20256, 7},  {100, 1700, 34},
    {102, 1734, 50},  {106, 1378, 120}, {108, 11772, 14}, {110, 550, 72},
    {112, 224, 41},
};

void crit02() {
    SieveConfig cfg;
    cfg.limit = 100000;
    auto reports = s_class_counts(cfg, 112, {100000});
    expect_eq(reports.size(), std::size(kRows1e5), "row count at 1e5");
    size_t n = std::min(reports.size(), std::size(kRows1e5));
    for (size_t i = 0; i < n; ++i) {
        const auto& r = reports[i];
        const auto& w = kRows1e5[i];
        std::string tag = " for class of " + std::to_string(w.first);
        expect_eq(r.first, w.first, "first" + tag);
        expect(r.second && *r.second == w.second, "second element" + tag);
        expect(r.counts.size() == 1 && r.counts[0].second == w.count, "count" + tag);
    }
}

void crit03() {
    SieveConfig cfg;
    cfg.limit = 10000000;
    cfg.segment_size = uint64_t(1) << 20;
    cfg.workers = pool_workers();
    auto reports = s_class_counts(cfg, 10, {10000000});
    const uint64_t want[] = {758582, 320500, 125712, 99675};
    const uint64_t firsts[] = {2, 4, 6, 10};
    expect_eq(reports.size(), size_t(4), "row count at 1e7");
    for (size_t i = 0; i < std::min<size_t>(reports.size(), 4); ++i) {
        expect_eq(reports[i].first, firsts[i], "first at 1e7");
        expect(reports[i].counts[0].second == want[i],
               "class size of " + std::to_string(firsts[i]) + " at 1e7: got " +
                   std::to_string(reports[i].counts[0].second) + ", want " +
                   std::to_string(want[i]));
    }
}

// ---- 04: residue split of the classes of 2 and 4 at 1e6 ------------------

void crit04() {
    SieveConfig cfg;
    cfg.limit = 1000000;
    cfg.workers = pool_workers();

    auto rep2 = residue_statistics(cfg, 2, {8});
    expect_eq(rep2.total, uint64_t(77696), "class of 2: total at 1e6");
    const auto& c2 = rep2.moduli[0].class_counts;
    expect_eq(c2[2], uint64_t(38849), "class of 2: residue 2 mod 8");
    expect_eq(c2[6], uint64_t(38847), "class of 2: residue 6 mod 8");
    for (uint64_t r : {0, 1, 3, 4, 5, 7})
        expect(c2[r] == 0, "class of 2: residue " + std::to_string(r) + " mod 8 empty");

    auto rep4 = residue_statistics(cfg, 4, {8});
    expect_eq(rep4.total, uint64_t(33001), "class of 4: total at 1e6");
    const auto& c4 = rep4.moduli[0].class_counts;
    expect_eq(c4[0], uint64_t(9490), "class of 4: residue 0 mod 8");
    expect_eq(c4[4], uint64_t(23511), "class of 4: residue 4 mod 8");
    for (uint64_t r : {1, 2, 3, 5, 6, 7})
        expect(c4[r] == 0, "class of 4: residue " + std::to_string(r) + " mod 8 empty");
}

// ---- 05/06: counting functions -------------------------------------------

void crit05() {
    SieveConfig cfg;
    cfg.limit = 1000000;
    cfg.workers = pool_workers();
    auto reports = count_first_subscripts(cfg, {100000, 1000000});
    expect_eq(reports[0].count, uint64_t(24662), "least-subscript count at 1e5");
    expect_eq(reports[1].count, uint64_t(235072), "least-subscript count at 1e6");
    expect_eq(fixed_ratio(reports[0].ratio, 3), std::string(".476"), "ratio at 1e5");
    expect_eq(fixed_ratio(reports[1].ratio, 3), std::string(".478"), "ratio at 1e6");
}

void crit06() {
    auto reports = count_denominators(std::vector<uint64_t>{100000, 1000000});
    expect_eq(reports[0].count, uint64_t(513), "denominator count at 1e5");
    expect_eq(reports[1].count, uint64_t(3649), "denominator count at 1e6");
    expect_eq(fixed_ratio(reports[0].ratio, 3), std::string(".053"), "ratio at 1e5");
    expect_eq(fixed_ratio(reports[1].ratio, 3), std::string(".046"), "ratio at 1e6");
}

// ---- 07/08: prime partition by cofactor ----------------------------------

void crit07() {
    auto cells = partition_counts(uint64_t(100000), {6, 30, 42, 66});
    const uint64_t want[] = {1135, 600, 480, 275};
    const char* frac[] = {".1183", ".0626", ".0500", ".0287"};
    for (size_t i = 0; i < 4; ++i) {
        expect(cells[i].count == want[i],
               "partition count for d=" + std::to_string(cells[i].target) + ": got " +
                   std::to_string(cells[i].count));
        expect_eq(fixed_ratio(cells[i].fraction, 4), std::string(frac[i]),
                  "fraction for d=" + std::to_string(cells[i].target));
    }
}

void crit08() {
    auto a = count_cofactor_not_denominator(100000);
    auto b = count_cofactor_not_denominator(1000000);
    expect_eq(a.count, uint64_t(4183), "non-denominator cofactors at 1e5");
    expect_eq(b.count, uint64_t(34647), "non-denominator cofactors at 1e6");
    expect_eq(fixed_ratio(a.ratio, 3), std::string(".436"), "fraction at 1e5");
    expect_eq(fixed_ratio(b.ratio, 3), std::string(".441"), "fraction at 1e6");
}

// ---- 09: primality split of d+1 ------------------------------------------

void crit09() {
    const uint64_t bounds[] = {1000, 10000, 100000};
    const uint64_t comp[] = {4, 56, 361};
    const uint64_t prim[] = {10, 28, 152};
    for (size_t i = 0; i < 3; ++i) {
        auto rep = d_plus_one_split(bounds[i]);
        std::string tag = " at " + std::to_string(bounds[i]);
        expect_eq(rep.composite_count, comp[i], "composite d+1 count" + tag);
        expect_eq(rep.prime_count, prim[i], "prime d+1 count" + tag);
    }
}

// ---- 10: structural properties -------------------------------------------

void prop_bijection_1e5() {
    auto denoms = denominators_upto(100000);
    expect_eq(denoms.size(), size_t(513), "denominator list size at 1e5");
    std::set<uint64_t> image;
    for (uint64_t d : denoms) {
        uint64_t lam = carmichael_lambda(d);
        expect(is_first_subscript(lam),
               "lambda(" + std::to_string(d) + ") is a least subscript");
        expect(denominator(lam).value == d,
               "denominator at lambda recovers d=" + std::to_string(d));
        image.insert(lam);
    }
    expect_eq(image.size(), denoms.size(), "lambda is injective on denominators");

    // reverse direction on a small prefix: every least subscript's denominator
    // is in the set and maps back
    for (uint64_t n : first_subscripts_upto(2000)) {
        Denom d = denominator(n);
        expect(is_bernoulli_denominator(d.prime_set),
               "D at least subscript " + std::to_string(n) + " is a denominator");
        expect(d.prime_set.lambda() == n, "lambda returns to " + std::to_string(n));
    }
}

void prop_lambda_image_1e4() {
    for (uint64_t m = 3; m <= 10000; ++m) {
        if (!factorize(m).squarefree()) continue;
        uint64_t lam = carmichael_lambda(m);
        if (!is_first_subscript(lam)) {
            expect(false, "lambda(" + std::to_string(m) + ") = " + std::to_string(lam) +
                              " is not a least subscript");
            return;
        }
    }
}

void prop_cofactor_equivalence_1e4() {
    // d_3 = 2 is the lone degenerate: lambda(2) = 1 < 2 yet 2 is not a
    // denominator, so the equivalence below starts at p = 5
    Denom d3 = denominator_cofactor(3);
    expect(d3.value == 2 && d3.prime_set.lambda() == 1, "cofactor of 3 is the unit class");
    expect(!is_bernoulli_denominator(d3.prime_set), "2 is not a denominator");

    auto bm = detail::odd_composite_bitmap(10000);
    for (uint64_t p = 3; p <= 10000; p += 2) {
        if (!detail::bitmap_is_prime(bm, p)) continue;
        Denom dp = denominator_cofactor(p);
        uint64_t lam = dp.prime_set.lambda();
        expect((p - 1) % lam == 0, "lambda(d_p) divides p-1 at p=" + std::to_string(p));
        if (p >= 5) {
            bool in_d = is_bernoulli_denominator(dp.prime_set);
            expect(in_d == (lam < p - 1),
                   "cofactor membership mismatch at p=" + std::to_string(p));
        }
    }
}

void prop_injection_1e5() {
    const std::pair<uint64_t, uint64_t> pairs[] = {{2, 2}, {2, 3}, {4, 2}, {6, 2}, {6, 3}};
    for (auto [n, r] : pairs) {
        auto from = u_set_excluding(n * r, r, 100000);
        auto into = u_set_excluding(n, r, 100000);
        std::string tag = " for (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
        expect(from.size() <= into.size(), "injection cardinality" + tag);
        for (uint64_t x : from) {
            expect(x % r == 0, "member divisible by r" + tag);
            expect(std::binary_search(into.begin(), into.end(), x / r),
                   "image of " + std::to_string(x) + " present" + tag);
        }
    }
}

void prop_denominator_shape() {
    // squarefree, divisible by 6, and monotone under subscript divisibility
    std::vector<Int> cache(2501);
    for (uint64_t n = 2; n <= 5000; n += 2) {
        Denom d = denominator(n);
        expect(mpz_divisible_ui_p(d.value.get_mpz_t(), 6) != 0,
               "6 divides D at n=" + std::to_string(n));
        Int prod = 1;
        uint64_t prev = 0;
        for (uint64_t p : d.prime_set.primes) {
            expect(p > prev, "prime support strictly increasing at n=" + std::to_string(n));
            expect(is_prime(p), "support member prime at n=" + std::to_string(n));
            prev = p;
            prod *= Int(static_cast<unsigned long>(p));
        }
        expect(prod == d.value, "value is the product of distinct primes at n=" +
                                    std::to_string(n));
        cache[n / 2] = d.value;
    }
    for (uint64_t n = 2; n <= 5000; n += 2)
        for (uint64_t m = 2; m <= n; m += 2)
            if (n % m == 0 && !mpz_divisible_p(cache[n / 2].get_mpz_t(), cache[m / 2].get_mpz_t()))
                expect(false, "D_" + std::to_string(m) + " does not divide D_" +
                                  std::to_string(n));
}

void prop_germain_1e4() {
    auto ps = germain_primes(10000);
    expect(!ps.empty() && ps.front() == 2, "germain list starts at 2");
    for (uint64_t p : ps) {
        Denom d = denominator(2 * p);
        expect(mpz_divisible_ui_p(d.value.get_mpz_t(), 2 * p + 1) != 0,
               "2p+1 divides D_2p at p=" + std::to_string(p));
    }
}

void prop_sieve_vs_direct_1e5() {
    SieveConfig cfg;
    cfg.limit = 100000;
    uint64_t mismatches = 0;
    sieve_denominators(cfg, [&](const DenomRecord& rec) {
        PrimeSet t = t_class(rec.n);
        if (rec.key != ClassKey::of(t) || rec.lambda != t.lambda()) ++mismatches;
    });
    expect(mismatches == 0, "sieve records equal direct evaluation at 1e5");
}

void prop_collision_audit_1e6() {
    // one representative T-set per digest; any second set on the same digest
    // is a collision and breaks every count in the suite
    SieveConfig cfg;
    cfg.limit = 1000000;
    cfg.workers = pool_workers();
    std::unordered_map<ClassKey, std::vector<uint64_t>, ClassKeyHash> reps;
    uint64_t collisions = 0;
    sieve_denominators(cfg, [&](const DenomRecord& rec) {
        PrimeSet t = t_class(rec.n);
        auto [it, inserted] = reps.try_emplace(rec.key, t.primes);
        if (!inserted && it->second != t.primes) ++collisions;
    });
    expect(collisions == 0, "digest collisions at 1e6: " + std::to_string(collisions));
    expect(reps.size() > 100000, "distinct classes seen at 1e6");
}

void crit10() {
    prop_bijection_1e5();
    prop_lambda_image_1e4();
    prop_cofactor_equivalence_1e4();
    prop_injection_1e5();
    prop_denominator_shape();
    prop_germain_1e4();
    prop_sieve_vs_direct_1e5();
    prop_collision_audit_1e6();
}

// ---- 11: witness families, exhaustively to 1e5 ---------------------------

void crit11() {
    auto outs = witness_not_in_denominators(100000);
    expect(!outs.empty(), "family of non-denominator cofactors is populated");
    bool saw13 = false;
    for (const auto& w : outs) {
        saw13 |= w.p == 13;
        expect(w.q % 4 == 3 && w.q > 3 && is_prime(w.q), "q shape at q=" + std::to_string(w.q));
        expect(w.p == 2 * w.q - 1 && w.p <= 100000 && is_prime(w.p),
               "p shape at p=" + std::to_string(w.p));
        Denom dp = denominator_cofactor(w.p);
        expect(dp.value == w.d_p, "reported cofactor at p=" + std::to_string(w.p));
        expect(dp.prime_set.lambda() == w.p - 1 && w.lambda_d_p == w.p - 1,
               "lambda(d_p) = p-1 at p=" + std::to_string(w.p));
        expect(!is_bernoulli_denominator(dp.prime_set),
               "d_p stays outside the denominator set at p=" + std::to_string(w.p));
    }
    expect(saw13, "p=13 appears in the non-denominator family");

    auto ins = witness_in_denominators(100000);
    expect(ins.size() >= 3, "family of denominator cofactors is populated");
    std::set<uint64_t> ps;
    for (const auto& w : ins) {
        ps.insert(w.p);
        expect(is_prime(w.r) && w.q == 2 * w.r + 1 && is_prime(w.q) && w.p == 6 * w.q + 1 &&
                   w.p <= 100000 && is_prime(w.p),
               "chain shape at p=" + std::to_string(w.p));
        expect(carmichael_lambda(w.p - 1) == 2 * w.r,
               "lambda(p-1) = 2r at p=" + std::to_string(w.p));
        expect(denominator(2 * w.r).value == Int(static_cast<unsigned long>(w.p - 1)) &&
                   w.denominator_2r == w.p - 1,
               "D_2r = p-1 at p=" + std::to_string(w.p));
        expect(is_bernoulli_denominator(w.p - 1),
               "p-1 is in the denominator set at p=" + std::to_string(w.p));
    }
    expect(ps.count(31) && ps.count(43) && ps.count(67),
           "chain family contains 31, 43, 67");
}

// ---- driver ---------------------------------------------------------------

struct Criterion {
    int id;
    const char* what;
    double budget_s;
    void (*run)();
};

const Criterion kCriteria[] = {
    {1, "recurrence oracle equivalence, even n <= 100", 1, crit01},
    {2, "class-count rows at 1e5 (37 classes)", 10, crit02},
    {3, "class-count rows at 1e7 (4 classes)", 300, crit03},
    {4, "residue split of two classes at 1e6", 60, crit04},
    {5, "least-subscript counting function", 60, crit05},
    {6, "denominator counting function", 60, crit06},
    {7, "prime partition by cofactor at 1e5", 30, crit07},
    {8, "non-denominator cofactor counts", 60, crit08},
    {9, "primality split of d+1", 30, crit09},
    {10, "structural property suite", 120, crit10},
    {11, "witness families to 1e5", 30, crit11},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));

    bool all_ok = true;
    for (const auto& c : kCriteria) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end())
            continue;
        g_failures = 0;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run();
        } catch (const std::exception& e) {
            expect(false, std::string("unhandled exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs < c.budget_s;
        bool ok = g_failures == 0 && in_budget;
        all_ok = all_ok && ok;
        std::printf("criterion %02d %s  %s  [%.2f s, budget %.0f s]%s\n", c.id,
                    ok ? "PASS" : "FAIL", c.what, secs, c.budget_s,
                    in_budget ? "" : " (over budget)");
        std::fflush(stdout);
    }
    return all_ok ? 0 : 1;
}
