#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace chensieve::primes {

/// An integer interval [lo, hi] processed in fixed-width segments.
/// The segment grid depends only on (lo, segment_size), never on the
/// worker count, which keeps merged results deterministic.
struct SegmentedRange {
    uint64_t lo = 2;
    uint64_t hi = 2;
    uint64_t segment_size = 1u << 18;

    void validate() const; // throws ValidationError on a bad range
};

/// All primes <= limit, in increasing order.
struct PrimeTable {
    uint64_t limit = 0;
    std::vector<uint64_t> primes;
};

struct FactorEntry {
    uint64_t prime;
    uint32_t exponent;
};

/// Complete factorizations for every n in a range, pooled contiguously.
/// Factor lists are in strictly increasing prime order and multiply back
/// to n exactly. Immutable after construction; safe to share across threads.
class IntervalFactorization {
public:
    IntervalFactorization() = default;
    IntervalFactorization(SegmentedRange range, std::vector<uint32_t> offsets,
                          std::vector<FactorEntry> pool);

    const SegmentedRange& range() const { return range_; }

    std::span<const FactorEntry> factors(uint64_t n) const {
        uint64_t i = n - range_.lo;
        return {pool_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    uint64_t least_factor(uint64_t n) const { return factors(n).front().prime; }

    /// Number of prime factors counted with multiplicity.
    static uint32_t big_omega(std::span<const FactorEntry> fs) {
        uint32_t s = 0;
        for (const auto& f : fs) s += f.exponent;
        return s;
    }

private:
    SegmentedRange range_;
    std::vector<uint32_t> offsets_; // size (hi-lo+2), prefix offsets into pool_
    std::vector<FactorEntry> pool_;
};

/// All primes <= limit by segmented sieve of Eratosthenes.
/// Deterministic output; `threads` only controls segment parallelism.
PrimeTable sieve_primes(uint64_t limit, unsigned threads = 1);

/// Factorizes every n in `range` by offset sieving with the base table,
/// which must cover sqrt(range.hi) (DependencyError otherwise).
IntervalFactorization factorize_interval(const SegmentedRange& range,
                                         const PrimeTable& base,
                                         unsigned threads = 1);

/// Single-segment kernel used by factorize_interval and by streaming passes.
IntervalFactorization factorize_segment(uint64_t lo, uint64_t hi, const PrimeTable& base);

/// Smallest prime factor of n (n itself when prime); n >= 2.
uint64_t least_prime_factor(uint64_t n);

/// True iff no prime p < y divides n, i.e. gcd(n, P(y)) = 1 where P(y) is
/// the product of primes below y. P(y) is never materialized; the check
/// goes through the least prime factor.
bool coprime_to_small_primes(uint64_t n, double y);

} // namespace chensieve::primes
