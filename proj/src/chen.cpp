#include "chensieve/chen.hpp"

#include <cmath>

#include "chensieve/errors.hpp"
#include "chensieve/util.hpp"

namespace chensieve::chen {

namespace {

std::vector<primes::FactorEntry> trial_factorize(uint64_t n) {
    std::vector<primes::FactorEntry> fs;
    uint64_t m = n;
    while (m > 1) {
        uint64_t p = primes::least_prime_factor(m);
        uint32_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        fs.push_back({p, e});
    }
    return fs;
}

bool is_prime(uint64_t n) { return n >= 2 && primes::least_prime_factor(n) == n; }

/// p1 >= p^exponent. Exact integer comparison p1^k >= p whenever
/// 1/exponent is an integer k (the default 8).
bool meets_factor_floor(uint64_t p1, uint64_t p, double exponent) {
    double inv = 1.0 / exponent;
    auto k = (unsigned)std::llround(inv);
    if (k >= 1 && std::abs(inv - (double)k) < 1e-9)
        return detail::ipow128(p1, k) >= (unsigned __int128)p;
    return std::pow((double)p, exponent) <= (double)p1 * (1.0 + 1e-12);
}

void check_p2_domain(uint64_t n, double x) {
    // n > x^{2/3} iff n^3 > x^2, kept in integer/extended precision
    bool above = (long double)detail::ipow128(n, 3) > (long double)x * (long double)x;
    bool below = (long double)n <= (long double)x;
    if (!above || !below)
        throw ValidationError("n outside the window (x^{2/3}, x]");
}

} // namespace

FactorClassification classify(uint64_t n) {
    if (n < 2) throw ValidationError("classify: n must be >= 2");
    auto fs = trial_factorize(n);
    return classify(n, fs);
}

FactorClassification classify(uint64_t n, std::span<const primes::FactorEntry> factors) {
    FactorClassification c;
    c.n = n;
    c.min_factor = factors.front().prime;
    uint32_t omega = primes::IntervalFactorization::big_omega(factors);
    if (omega <= 3) {
        // flatten with multiplicity; entries are already sorted by prime
        std::array<uint64_t, 3> flat{0, 0, 0};
        size_t k = 0;
        for (const auto& f : factors)
            for (uint32_t i = 0; i < f.exponent; ++i) flat[k++] = f.prime;
        if (omega == 1) {
            c.kind = FactorKind::Prime;
            c.parts = {n, 0, 0};
        } else if (omega == 2) {
            c.kind = FactorKind::Semiprime;
            c.parts = {flat[0], flat[1], 0};
        } else {
            c.kind = FactorKind::TripleProduct;
            c.parts = flat;
        }
        return c;
    }
    if (factors.size() == 1) {
        c.kind = FactorKind::PrimePower;
        c.parts = {factors.front().prime, factors.front().exponent, 0};
        return c;
    }
    c.kind = FactorKind::Other;
    return c;
}

ChenBranch chen_branch_from_factors(uint64_t p, std::span<const primes::FactorEntry> plus2_factors,
                                    double exponent) {
    uint32_t omega = primes::IntervalFactorization::big_omega(plus2_factors);
    if (omega == 1) return ChenBranch::Twin;
    if (omega == 2 && meets_factor_floor(plus2_factors.front().prime, p, exponent))
        return ChenBranch::QualifiedSemiprime;
    return ChenBranch::NotChen;
}

ChenVerdict is_chen_prime(uint64_t p, double exponent) {
    if (!is_prime(p)) throw ValidationError("is_chen_prime: p must be prime");
    ChenVerdict v;
    v.p = p;
    auto fs = trial_factorize(p + 2);
    v.branch = chen_branch_from_factors(p, fs, exponent);
    v.is_chen = v.branch != ChenBranch::NotChen;
    if (v.branch == ChenBranch::QualifiedSemiprime) {
        std::array<uint64_t, 2> flat{0, 0};
        size_t k = 0;
        for (const auto& f : fs)
            for (uint32_t i = 0; i < f.exponent; ++i) flat[k++] = f.prime;
        v.witness = {flat[0], flat[1]};
    }
    return v;
}

int p2_indicator(uint64_t n, double x) {
    check_p2_domain(n, x);
    auto fs = trial_factorize(n);
    return primes::IntervalFactorization::big_omega(fs) <= 2 ? 1 : 0;
}

HalfInteger p2_minorant(uint64_t n, double x) {
    auto fs = trial_factorize(n);
    return p2_minorant(n, x, fs);
}

HalfInteger p2_minorant(uint64_t n, double x, std::span<const primes::FactorEntry> factors) {
    check_p2_domain(n, x);
    int64_t small_divisors = 0;  // #{p <= x^{1/3} : p | n}
    int64_t small_squares = 0;   // #{p <= x^{1/3} : p^2 | n}
    for (const auto& f : factors) {
        if (!detail::pow_at_most(f.prime, 3, x)) break;
        ++small_divisors;
        if (f.exponent >= 2) ++small_squares;
    }
    int64_t triple = 0; // n = p1 p2 p3 with p1 <= x^{1/3} < p2 <= p3
    if (primes::IntervalFactorization::big_omega(factors) == 3) {
        std::array<uint64_t, 3> flat;
        size_t k = 0;
        for (const auto& f : factors)
            for (uint32_t i = 0; i < f.exponent; ++i) flat[k++] = f.prime;
        if (detail::pow_at_most(flat[0], 3, x) && !detail::pow_at_most(flat[1], 3, x)) triple = 1;
    }
    return {2 - small_divisors - triple - 2 * small_squares};
}

std::vector<uint64_t> verify_p2_minorant(double x, unsigned shards) {
    if (!(x >= 8.0)) throw ValidationError("verify_p2_minorant: x must be >= 8");
    if (x > (double)configured_max()) throw ResourceError("verify_p2_minorant: x beyond configured range");
    uint64_t hi = detail::floor_to_u64((long double)x);
    // first n with n^3 > x^2
    uint64_t lo = detail::floor_to_u64(std::pow((long double)x, 2.0L / 3.0L));
    while ((long double)detail::ipow128(lo, 3) <= (long double)x * (long double)x) ++lo;
    while (lo > 2 && (long double)detail::ipow128(lo - 1, 3) > (long double)x * (long double)x) --lo;
    if (lo < 2) lo = 2;
    if (lo > hi) return {};

    auto base = primes::sieve_primes(
        std::max<uint64_t>(2, (uint64_t)std::sqrt((double)hi) + 1));
    auto partials = detail::map_segments<std::vector<uint64_t>>(
        lo, hi, 1u << 18, shards, [&](uint64_t s_lo, uint64_t s_hi) {
            std::vector<uint64_t> bad;
            auto fact = primes::factorize_segment(s_lo, s_hi, base);
            for (uint64_t n = s_lo; n <= s_hi; ++n) {
                auto fs = fact.factors(n);
                int ind = primes::IntervalFactorization::big_omega(fs) <= 2 ? 1 : 0;
                HalfInteger rhs = p2_minorant(n, x, fs);
                if (2 * ind < rhs.halves) bad.push_back(n);
            }
            return bad;
        });
    std::vector<uint64_t> out;
    for (auto& part : partials) out.insert(out.end(), part.begin(), part.end());
    return out;
}

} // namespace chensieve::chen
