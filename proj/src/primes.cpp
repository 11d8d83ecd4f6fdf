#include "chensieve/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>

#include "chensieve/errors.hpp"
#include "chensieve/util.hpp"

namespace chensieve {

namespace {

uint64_t g_max = 1'000'000'000ull;

uint64_t memory_budget_bytes() {
    static const uint64_t budget = [] {
        const char* env = std::getenv("CHEN_SIEVE_MAX_MEMORY_MB");
        if (!env || !*env) return uint64_t{0};
        long long mb = std::atoll(env);
        return mb > 0 ? (uint64_t)mb * 1024 * 1024 : uint64_t{0};
    }();
    return budget;
}

uint64_t isqrt_u64(uint64_t n) {
    uint64_t r = (uint64_t)std::sqrt((double)n);
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

uint64_t configured_max() { return g_max; }
void set_configured_max(uint64_t limit) { g_max = limit; }

void require_memory(uint64_t bytes, const char* what) {
    uint64_t budget = memory_budget_bytes();
    if (budget != 0 && bytes > budget) {
        throw ResourceError(std::string(what) + " needs ~" + std::to_string(bytes / (1024 * 1024)) +
                            " MB, above CHEN_SIEVE_MAX_MEMORY_MB");
    }
}

} // namespace chensieve

namespace chensieve::primes {

void SegmentedRange::validate() const {
    if (lo < 2) throw ValidationError("range.lo must be >= 2");
    if (hi < lo) throw ValidationError("range.hi must be >= range.lo");
    if (segment_size < 64) throw ValidationError("segment_size must be >= 64");
}

IntervalFactorization::IntervalFactorization(SegmentedRange range, std::vector<uint32_t> offsets,
                                             std::vector<FactorEntry> pool)
    : range_(range), offsets_(std::move(offsets)), pool_(std::move(pool)) {}

namespace {

// Plain sieve, used for base primes up to sqrt of the real target.
std::vector<uint64_t> simple_sieve(uint64_t limit) {
    std::vector<uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (uint64_t p = 2; p * p <= limit; ++p) {
        if (comp[p]) continue;
        for (uint64_t m = p * p; m <= limit; m += p) comp[m] = true;
    }
    for (uint64_t n = 2; n <= limit; ++n)
        if (!comp[n]) out.push_back(n);
    return out;
}

// Primes in [lo, hi] marked off against the base primes. Odd-only bitmap.
std::vector<uint64_t> sieve_segment(uint64_t lo, uint64_t hi, const std::vector<uint64_t>& base) {
    std::vector<uint64_t> out;
    if (lo < 2) lo = 2;
    if (lo > hi) return out;
    if (lo == 2) out.push_back(2);
    uint64_t first = std::max<uint64_t>(lo, 3) | 1; // first odd candidate
    if (first > hi) return out;
    size_t n_odd = (hi - first) / 2 + 1;
    std::vector<bool> comp(n_odd, false);
    for (uint64_t p : base) {
        if (p == 2) continue;
        if (p * p > hi) break;
        uint64_t m = std::max(p * p, ((first + p - 1) / p) * p);
        if (m % 2 == 0) m += p;
        for (; m <= hi; m += 2 * p) comp[(m - first) / 2] = true;
    }
    for (size_t i = 0; i < n_odd; ++i)
        if (!comp[i]) out.push_back(first + 2 * i);
    return out;
}

} // namespace

PrimeTable sieve_primes(uint64_t limit, unsigned threads) {
    if (limit < 2) throw ValidationError("sieve_primes: limit must be >= 2");
    if (limit > configured_max())
        throw ValidationError("sieve_primes: limit above configured maximum");
    // bitmap for one segment per worker + rough prime-count estimate
    double est_primes = limit < 17 ? 8.0 : 1.2 * (double)limit / std::log((double)limit);
    require_memory((uint64_t)(est_primes * 8.0) + limit / 8, "sieve_primes");

    uint64_t root = isqrt_u64(limit);
    std::vector<uint64_t> base = simple_sieve(root);
    if (limit <= root * root && limit <= 1u << 16) {
        PrimeTable t;
        t.limit = limit;
        t.primes = simple_sieve(limit);
        return t;
    }

    const uint64_t seg = 1u << 22;
    auto partials = detail::map_segments<std::vector<uint64_t>>(
        2, limit, seg, threads,
        [&](uint64_t s_lo, uint64_t s_hi) { return sieve_segment(s_lo, s_hi, base); });

    PrimeTable t;
    t.limit = limit;
    size_t total = 0;
    for (const auto& p : partials) total += p.size();
    t.primes.reserve(total);
    for (auto& p : partials) t.primes.insert(t.primes.end(), p.begin(), p.end());
    return t;
}

IntervalFactorization factorize_segment(uint64_t lo, uint64_t hi, const PrimeTable& base) {
    struct Gather {
        uint32_t idx;
        uint64_t prime;
        uint32_t exp;
    };
    if (base.limit * base.limit < hi)
        throw DependencyError("factorize_segment: prime table must cover sqrt(hi)");
    size_t count = hi - lo + 1;
    std::vector<uint64_t> rem(count);
    for (size_t i = 0; i < count; ++i) rem[i] = lo + i;

    std::vector<Gather> gather;
    gather.reserve(count * 3);
    for (uint64_t p : base.primes) {
        if (p * p > hi) break;
        uint64_t m = ((lo + p - 1) / p) * p;
        for (; m <= hi; m += p) {
            size_t idx = m - lo;
            uint32_t e = 0;
            while (rem[idx] % p == 0) {
                rem[idx] /= p;
                ++e;
            }
            gather.push_back({(uint32_t)idx, p, e});
        }
    }
    // leftover cofactors are prime (> sqrt(hi)), appended after all sieved
    // primes so each factor list stays sorted
    for (size_t i = 0; i < count; ++i)
        if (rem[i] > 1) gather.push_back({(uint32_t)i, rem[i], 1});

    // counting sort by index; stable, so per-n prime order is preserved
    std::vector<uint32_t> offsets(count + 2, 0);
    for (const auto& g : gather) ++offsets[g.idx + 1];
    for (size_t i = 1; i <= count + 1; ++i) offsets[i] += offsets[i - 1];
    std::vector<FactorEntry> pool(gather.size());
    {
        std::vector<uint32_t> cursor(offsets.begin(), offsets.end() - 1);
        for (const auto& g : gather) pool[cursor[g.idx]++] = {g.prime, g.exp};
    }
    offsets.pop_back();
    return IntervalFactorization({lo, hi, hi - lo + 1}, std::move(offsets), std::move(pool));
}

IntervalFactorization factorize_interval(const SegmentedRange& range, const PrimeTable& base,
                                         unsigned threads) {
    range.validate();
    if (range.hi > configured_max() + 2)
        throw ResourceError("factorize_interval: range above configured maximum");
    uint64_t root = isqrt_u64(range.hi);
    if (base.limit < root)
        throw DependencyError("factorize_interval: prime table must cover sqrt(range.hi)");
    uint64_t count = range.hi - range.lo + 1;
    require_memory(count * (8 + 4) + count * 3 * sizeof(FactorEntry) * 2, "factorize_interval");

    auto partials = detail::map_segments<IntervalFactorization>(
        range.lo, range.hi, range.segment_size, threads,
        [&](uint64_t s_lo, uint64_t s_hi) { return factorize_segment(s_lo, s_hi, base); });

    std::vector<uint32_t> offsets;
    offsets.reserve(count + 1);
    std::vector<FactorEntry> pool;
    uint32_t shift = 0;
    for (uint64_t n = range.lo; n <= range.hi;) {
        const auto& part = partials[(n - range.lo) / range.segment_size];
        uint64_t p_lo = part.range().lo, p_hi = part.range().hi;
        for (uint64_t m = p_lo; m <= p_hi; ++m) {
            offsets.push_back(shift);
            auto fs = part.factors(m);
            pool.insert(pool.end(), fs.begin(), fs.end());
            shift += (uint32_t)fs.size();
        }
        n = p_hi + 1;
        if (p_hi == range.hi) break;
    }
    offsets.push_back(shift);
    return IntervalFactorization(range, std::move(offsets), std::move(pool));
}

uint64_t least_prime_factor(uint64_t n) {
    if (n < 2) throw ValidationError("least_prime_factor: n must be >= 2");
    if (n % 2 == 0) return 2;
    if (n % 3 == 0) return 3;
    for (uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0) return d;
        if (n % (d + 2) == 0) return d + 2;
    }
    return n;
}

bool coprime_to_small_primes(uint64_t n, double y) {
    if (n < 1) throw ValidationError("coprime_to_small_primes: n must be >= 1");
    if (y < 2) throw ValidationError("coprime_to_small_primes: y must be >= 2");
    if (n == 1) return true;
    return (double)least_prime_factor(n) >= y;
}

} // namespace chensieve::primes
