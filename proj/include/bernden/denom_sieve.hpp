#ifndef BERNDEN_DENOM_SIEVE_HPP
#define BERNDEN_DENOM_SIEVE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bernden/types.hpp"

namespace bernden {

// 128-bit digest identifying a T-set.  Canonical encoding: primes folded in
// ascending order into two independently mixed 64-bit lanes with fixed seeds.
struct ClassKey {
    uint64_t lo = 0x243F6A8885A308D3ull;
    uint64_t hi = 0x13198A2E03707344ull;

    void fold(uint64_t p);
    static ClassKey of(const PrimeSet& t);

    bool operator==(const ClassKey&) const = default;
};

struct ClassKeyHash {
    size_t operator()(const ClassKey& k) const { return k.lo ^ (k.hi * 0x9E3779B97F4A7C15ull); }
};

struct SieveConfig {
    uint64_t limit = 2;                       // max subscript, inclusive
    uint64_t segment_size = uint64_t(1) << 22;  // even subscripts per segment
    unsigned workers = 1;
    uint64_t memory_budget = uint64_t(3) << 31;  // bytes

    void validate() const;  // throws std::invalid_argument / std::length_error
};

struct DenomRecord {
    uint64_t n;          // even subscript
    ClassKey key;        // digest of T_n
    uint64_t lambda;     // lcm{p-1 : p in T_n} = the first element of n's class
};

using DenomEmit = std::function<void(const DenomRecord&)>;

// Emits one record for every even n in [2, limit], ascending, regardless of
// worker count.  The per-segment marking pass visits, for each prime p with
// p-1 <= limit, all multiples of p-1 inside the segment.
void sieve_denominators(const SieveConfig& cfg, const DenomEmit& emit);

// Same stream, but persisted: records already in the checkpoint file are
// replayed instead of recomputed, and freshly sieved records are appended.
// The file holds "BDEN", a u16 version, then little-endian
// (n: u64, digest: u128, lambda: u64) triples; a truncated tail is ignored.
void sieve_denominators_checkpointed(const SieveConfig& cfg, const std::string& path,
                                     const DenomEmit& emit);

// Checkpoint file primitives (exposed for tooling and tests).
namespace checkpoint {
inline constexpr char kMagic[4] = {'B', 'D', 'E', 'N'};
inline constexpr uint16_t kVersion = 1;

class Writer {
  public:
    // Opens for append, writing the header if the file is new/empty.
    explicit Writer(const std::string& path);
    ~Writer();
    Writer(const Writer&) = delete;
    Writer& operator=(const Writer&) = delete;
    void append(const DenomRecord& rec);
    void flush();

  private:
    struct Impl;
    Impl* impl_;
};

// Replays complete records (ascending n as written); returns the last n seen,
// or nullopt for an empty/fresh file.  Throws std::runtime_error on a bad
// header.  stop_after: records with n > stop_after are skipped, not emitted.
std::optional<uint64_t> replay(const std::string& path, uint64_t stop_after,
                               const DenomEmit& emit);
}  // namespace checkpoint

// One row of the class-count tables.
struct ClassReport {
    uint64_t first = 0;                 // 2k, least element, in F
    std::optional<uint64_t> second;     // 2k', next element, absent if > limit
    PrimeSet t_set;
    std::vector<std::pair<uint64_t, uint64_t>> counts;  // (bound, count<=bound)
};

// One report per 2k in F with 2k <= max_first: how many m <= bound share
// T_m = T_{2k}, at each checkpoint.  Checkpoints must ascend, max <= limit.
std::vector<ClassReport> s_class_counts(const SieveConfig& cfg, uint64_t max_first,
                                        const std::vector<uint64_t>& checkpoints,
                                        const std::string& checkpoint_file = {});

struct ResidueReport {
    uint64_t first = 0;
    uint64_t total = 0;  // elements of the class <= limit
    struct PerModulus {
        uint64_t modulus;
        std::vector<uint64_t> class_counts;  // indices 0..modulus-1
    };
    std::vector<PerModulus> moduli;
};

// Residue-class tallies of the class of `first` (which must be in F).
ResidueReport residue_statistics(const SieveConfig& cfg, uint64_t first,
                                 const std::vector<uint64_t>& moduli,
                                 const std::string& checkpoint_file = {});

// U_n = {mn : D_mn = D_n}, members <= limit, ascending.  n itself included.
std::vector<uint64_t> u_set(uint64_t n, uint64_t limit);

// U_{n,r}: members of U_n whose cofactor m is not divisible by the prime r.
std::vector<uint64_t> u_set_excluding(uint64_t n, uint64_t r, uint64_t limit);

// Largest i <= max_exponent with D_{n r^i} = D_n.  Once equality fails it
// fails for every larger i, so the scan stops at the first mismatch.
// range_exhausted is false when n*r^(i+1) left 64 bits before a mismatch or
// the cap was reached, i.e. the reported value is only a lower bound.
struct PowerRun {
    uint64_t max_i = 0;
    bool range_exhausted = true;
};
PowerRun max_power_preserving_denominator(uint64_t n, uint64_t r, uint64_t max_exponent);

}  // namespace bernden

#endif
