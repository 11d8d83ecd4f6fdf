#pragma once

#include <cmath>
#include <cstdint>
#include <future>
#include <vector>

#include "chensieve/errors.hpp"

namespace chensieve {

/// Global size cap for sieving/factorization requests (default 10^9).
uint64_t configured_max();
void set_configured_max(uint64_t limit);

/// Throws ResourceError when a planned allocation would exceed the
/// CHEN_SIEVE_MAX_MEMORY_MB budget (unset or 0 means unlimited).
void require_memory(uint64_t bytes, const char* what);

namespace detail {

/// Compensated (Kahan) accumulator. Addition order fixed by the caller,
/// so results are reproducible across runs and shard counts.
struct Kahan {
    double sum = 0.0;
    double c = 0.0;
    void add(double v) {
        double y = v - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// p^k as an unsigned 128-bit value, saturating at the type maximum.
inline unsigned __int128 ipow128(uint64_t p, unsigned k) {
    const unsigned __int128 cap = ~(unsigned __int128)0;
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (p != 0 && r > cap / p) return cap;
        r *= p;
    }
    return r;
}

/// p^k <= x. Exact for every tie that a 53-bit x can represent.
inline bool pow_at_most(uint64_t p, unsigned k, double x) {
    return (long double)ipow128(p, k) <= (long double)x;
}

/// p^k < x.
inline bool pow_below(uint64_t p, unsigned k, double x) {
    return (long double)ipow128(p, k) < (long double)x;
}

inline uint64_t ceil_to_u64(long double v) {
    long double c = std::ceil(v);
    return c < 0 ? 0 : (uint64_t)c;
}

inline uint64_t floor_to_u64(long double v) {
    long double f = std::floor(v);
    return f < 0 ? 0 : (uint64_t)f;
}

/// Splits [lo, hi] into fixed segments of width `segment_size` and applies
/// `work(seg_lo, seg_hi)` to each. Segments run concurrently in batches of
/// `threads`, but the returned partials are always in ascending segment
/// order, so any ordered reduction over them is independent of `threads`.
template <class Partial, class Work>
std::vector<Partial> map_segments(uint64_t lo, uint64_t hi, uint64_t segment_size,
                                  unsigned threads, Work&& work) {
    std::vector<Partial> out;
    if (lo > hi) return out;
    if (segment_size == 0) segment_size = 1;
    uint64_t nseg = (hi - lo) / segment_size + 1;
    out.reserve(nseg);
    if (threads == 0) threads = 1;
    for (uint64_t batch = 0; batch < nseg; batch += threads) {
        uint64_t nb = std::min<uint64_t>(threads, nseg - batch);
        if (nb == 1) {
            uint64_t s_lo = lo + batch * segment_size;
            uint64_t s_hi = std::min(hi, s_lo + segment_size - 1);
            out.push_back(work(s_lo, s_hi));
            continue;
        }
        std::vector<std::future<Partial>> futs;
        futs.reserve(nb);
        for (uint64_t i = 0; i < nb; ++i) {
            uint64_t s_lo = lo + (batch + i) * segment_size;
            uint64_t s_hi = std::min(hi, s_lo + segment_size - 1);
            futs.push_back(std::async(std::launch::async, work, s_lo, s_hi));
        }
        for (auto& f : futs) out.push_back(f.get());
    }
    return out;
}

} // namespace detail
} // namespace chensieve
