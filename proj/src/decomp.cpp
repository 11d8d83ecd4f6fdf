#include "chensieve/decomp.hpp"

#include <algorithm>
#include <cmath>

#include "chensieve/chen.hpp"
#include "chensieve/errors.hpp"
#include "chensieve/util.hpp"

namespace chensieve::decomp {

namespace {

using detail::Kahan;
using detail::pow_at_most;
using detail::pow_below;

bool below_z(uint64_t p, double x) { return pow_below(p, 8, x); }       // p < x^{1/8}
bool at_most_cbrt(uint64_t p, double x) { return pow_at_most(p, 3, x); } // p <= x^{1/3}

bool admissible(uint64_t p, double x) { return !below_z(p, x) && at_most_cbrt(p, x); }

/// Number of factorizations m = p1 p2 p3 with z <= p1 <= x^{1/3} < p2 <= p3.
/// Unique when it exists: p2, p3 > x^{1/3} pins p1 to the smallest factor.
int qualified_triple_count(std::span<const primes::FactorEntry> factors, double x) {
    if (primes::IntervalFactorization::big_omega(factors) != 3) return 0;
    std::array<uint64_t, 3> flat;
    size_t k = 0;
    for (const auto& f : factors)
        for (uint32_t i = 0; i < f.exponent; ++i) flat[k++] = f.prime;
    return (!below_z(flat[0], x) && at_most_cbrt(flat[0], x) && !at_most_cbrt(flat[1], x)) ? 1 : 0;
}

primes::PrimeTable base_table_for(uint64_t hi) {
    uint64_t root = (uint64_t)std::sqrt((double)hi) + 2;
    return primes::sieve_primes(std::max<uint64_t>(root, 2));
}

struct WindowPartial {
    double A1 = 0, A3 = 0, A4 = 0, lhs = 0;
    std::vector<double> A2;
};

struct WindowTotals {
    double A1 = 0, A3 = 0, A4 = 0, lhs = 0;
    std::vector<uint64_t> plist;
    std::vector<double> A2_per_p;

    double A2_sum() const {
        double s = 0.0; // plain left-to-right, so sum == term-by-term singles
        for (double v : A2_per_p) s += v;
        return s;
    }
};

/// One pass over the window computing every A-sum at once. Per-segment
/// Kahan accumulation; segment partials merged in grid order, so results
/// do not depend on the shard count.
WindowTotals window_pass(const SieveParams& params, const arith::APClass& ap, unsigned shards) {
    WindowTotals totals;
    totals.plist = admissible_primes(params);
    totals.A2_per_p.assign(totals.plist.size(), 0.0);
    if (params.window_lo > params.window_hi) return totals;

    auto base = base_table_for(params.window_hi + 2);
    const double x = params.x;
    const uint64_t q = ap.q(), a_mod = ap.a() % ap.q();

    // slot lookup for primes <= x^{1/3}
    uint64_t cbrt_cap = totals.plist.empty() ? 0 : totals.plist.back();
    std::vector<int32_t> slot(cbrt_cap + 1, -1);
    for (size_t j = 0; j < totals.plist.size(); ++j) slot[totals.plist[j]] = (int32_t)j;

    auto partials = detail::map_segments<WindowPartial>(
        params.window_lo, params.window_hi, params.segment_size, shards,
        [&](uint64_t s_lo, uint64_t s_hi) {
            WindowPartial part;
            Kahan A1, A3, A4, lhs;
            std::vector<Kahan> A2(totals.plist.size());
            auto fact = primes::factorize_segment(s_lo, s_hi + 2, base);
            for (uint64_t n = s_lo + (a_mod + q - s_lo % q) % q; n <= s_hi; n += q) {
                auto fs_n = fact.factors(n);
                if (fs_n.size() != 1) continue; // Lambda vanishes
                double lam = std::log((double)fs_n.front().prime);
                auto fs_m = fact.factors(n + 2);
                A3.add(lam * qualified_triple_count(fs_m, x));
                if (below_z(fs_m.front().prime, x)) continue; // (n+2, P(z)) > 1
                A1.add(lam);
                if (primes::IntervalFactorization::big_omega(fs_m) <= 2) lhs.add(lam);
                for (const auto& f : fs_m) {
                    if (f.prime > cbrt_cap) break;
                    int32_t j = slot[f.prime];
                    if (j < 0) continue;
                    A2[(size_t)j].add(lam);
                    if (f.exponent >= 2) A4.add(lam);
                }
            }
            part.A1 = A1.value();
            part.A3 = A3.value();
            part.A4 = A4.value();
            part.lhs = lhs.value();
            part.A2.resize(A2.size());
            for (size_t j = 0; j < A2.size(); ++j) part.A2[j] = A2[j].value();
            return part;
        });

    Kahan A1, A3, A4, lhs;
    std::vector<Kahan> A2(totals.plist.size());
    for (const auto& part : partials) {
        A1.add(part.A1);
        A3.add(part.A3);
        A4.add(part.A4);
        lhs.add(part.lhs);
        for (size_t j = 0; j < A2.size(); ++j) A2[j].add(part.A2[j]);
    }
    totals.A1 = A1.value();
    totals.A3 = A3.value();
    totals.A4 = A4.value();
    totals.lhs = lhs.value();
    for (size_t j = 0; j < A2.size(); ++j) totals.A2_per_p[j] = A2[j].value();
    return totals;
}

} // namespace

SieveParams SieveParams::from_x(double x) {
    if (!(x > 8.0)) throw ValidationError("SieveParams: x must be > 8");
    if (x > (double)configured_max()) throw ResourceError("SieveParams: x beyond configured maximum");
    SieveParams p;
    p.x = x;
    p.z = std::pow(x, 1.0 / 8.0);
    p.eps_x = 1.0 / std::sqrt(std::log(x));
    p.D = std::pow(x, 0.5 - p.eps_x);
    p.window_lo = detail::ceil_to_u64((long double)x / 2.0L);
    p.window_hi = detail::floor_to_u64((long double)x - 2.0L);
    return p;
}

std::vector<uint64_t> admissible_primes(const SieveParams& params) {
    std::vector<uint64_t> out;
    uint64_t cap = detail::floor_to_u64(std::cbrt((long double)params.x)) + 2;
    auto table = primes::sieve_primes(std::max<uint64_t>(cap, 2));
    for (uint64_t p : table.primes)
        if (admissible(p, params.x)) out.push_back(p);
    return out;
}

double eval_A1(const SieveParams& params, const arith::APClass& ap, unsigned shards) {
    return window_pass(params, ap, shards).A1;
}

double eval_A2_single(const SieveParams& params, const arith::APClass& ap, uint64_t p) {
    if (!admissible(p, params.x))
        throw ValidationError("eval_A2_single: p outside [x^{1/8}, x^{1/3}]");
    if (params.window_lo > params.window_hi) return 0.0;
    auto base = base_table_for(params.window_hi + 2);
    const uint64_t q = ap.q(), a_mod = ap.a() % ap.q();

    auto partials = detail::map_segments<double>(
        params.window_lo, params.window_hi, params.segment_size, 1,
        [&](uint64_t s_lo, uint64_t s_hi) {
            Kahan acc;
            auto fact = primes::factorize_segment(s_lo, s_hi + 2, base);
            uint64_t m0 = ((s_lo + 2 + p - 1) / p) * p; // first n+2 divisible by p
            for (uint64_t n = m0 - 2; n <= s_hi; n += p) {
                if (n < s_lo) continue;
                if (n % q != a_mod) continue;
                auto fs_n = fact.factors(n);
                if (fs_n.size() != 1) continue;
                auto fs_m = fact.factors(n + 2);
                if (below_z(fs_m.front().prime, params.x)) continue;
                acc.add(std::log((double)fs_n.front().prime));
            }
            return acc.value();
        });
    Kahan total;
    for (double v : partials) total.add(v);
    return total.value();
}

double eval_A2_sum(const SieveParams& params, const arith::APClass& ap, unsigned shards) {
    return window_pass(params, ap, shards).A2_sum();
}

double eval_A3(const SieveParams& params, const arith::APClass& ap, unsigned shards) {
    return window_pass(params, ap, shards).A3;
}

double eval_A4_sum(const SieveParams& params, const arith::APClass& ap, unsigned shards) {
    return window_pass(params, ap, shards).A4;
}

double eval_lhs(const SieveParams& params, const arith::APClass& ap, unsigned shards) {
    return window_pass(params, ap, shards).lhs;
}

int b_weight(uint64_t n, const SieveParams& params) {
    if (n < 2) return 0;
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
    return b_weight(n, params, fs);
}

int b_weight(uint64_t n, const SieveParams& params, std::span<const primes::FactorEntry> factors) {
    // support window x/2 + 2 <= n <= x, compared without rounding:
    // n >= x/2+2  iff  2(n-2) >= x
    if (n < 2) return 0;
    if ((long double)(2 * (n - 2)) < (long double)params.x) return 0;
    if ((long double)n > (long double)params.x) return 0;
    return qualified_triple_count(factors, params.x);
}

uint64_t chen_count_ap(double x, const arith::APClass& ap, double exponent,
                       bool exclude_small_primes, unsigned shards) {
    if (!(x >= 3.0)) throw ValidationError("chen_count_ap: x must be >= 3");
    if (x > (double)configured_max()) throw ResourceError("chen_count_ap: x beyond configured maximum");
    uint64_t hi = detail::floor_to_u64((long double)x);
    if (hi < 2) return 0;
    auto base = base_table_for(hi + 2);
    const uint64_t q = ap.q(), a_mod = ap.a() % ap.q();

    auto partials = detail::map_segments<uint64_t>(
        2, hi, 1u << 18, shards, [&](uint64_t s_lo, uint64_t s_hi) {
            uint64_t count = 0;
            auto fact = primes::factorize_segment(s_lo, s_hi + 2, base);
            for (uint64_t p = s_lo; p <= s_hi; ++p) {
                auto fs = fact.factors(p);
                if (fs.size() != 1 || fs.front().exponent != 1) continue;
                if (p % q != a_mod) continue;
                if (exclude_small_primes && p < 5) continue;
                if (chen::chen_branch_from_factors(p, fact.factors(p + 2), exponent) !=
                    chen::ChenBranch::NotChen)
                    ++count;
            }
            return count;
        });
    uint64_t total = 0;
    for (uint64_t c : partials) total += c;
    return total;
}

DecompositionReport decompose(const SieveParams& params, const arith::APClass& ap,
                              unsigned shards) {
    WindowTotals t = window_pass(params, ap, shards);
    DecompositionReport r;
    r.x = params.x;
    r.ap = ap;
    r.A1 = t.A1;
    r.A2_sum = t.A2_sum();
    r.A3 = t.A3;
    r.A4_sum = t.A4;
    r.combination = r.A1 - r.A2_sum / 2.0 - r.A3 / 2.0 - r.A4_sum;
    r.lhs_theorem = t.lhs;
    r.normalizer = params.x / ((double)arith::phi2(ap.q()) * std::log(params.x));
    return r;
}

} // namespace chensieve::decomp
