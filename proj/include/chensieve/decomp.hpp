#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chensieve/arith.hpp"
#include "chensieve/primes.hpp"

namespace chensieve::decomp {

/// Scale parameters tied to a real x > 8: sifting level z = x^{1/8},
/// distribution level D = x^{1/2 - eps_x} with eps_x = (log x)^{-1/2},
/// and the integer summation window ceil(x/2) <= n <= floor(x-2).
struct SieveParams {
    double x = 0;
    double z = 0;
    double D = 0;
    double eps_x = 0;
    uint64_t window_lo = 0;
    uint64_t window_hi = 0;
    uint64_t segment_size = 1u << 18;

    static SieveParams from_x(double x);
};

struct DecompositionReport {
    double x = 0;
    arith::APClass ap{1, 1};
    double A1 = 0;
    double A2_sum = 0;
    double A3 = 0;
    double A4_sum = 0;
    double combination = 0; // A1 - A2_sum/2 - A3/2 - A4_sum
    double lhs_theorem = 0;
    double normalizer = 0;  // x / (phi2(q) * log x)
};

/// Primes p with z <= p <= x^{1/3} (both ends closed), the p-range of the
/// A2/A4 families. Boundary membership decided by exact power comparison.
std::vector<uint64_t> admissible_primes(const SieveParams& params);

/// A1 = sum over the window of Lambda_{a,q}(n) [n+2 free of primes < z].
double eval_A1(const SieveParams& params, const arith::APClass& ap, unsigned shards = 1);

/// One term of the A2 family: the A1 sum restricted to p | n+2.
/// p must lie in [z, x^{1/3}] (ValidationError otherwise).
double eval_A2_single(const SieveParams& params, const arith::APClass& ap, uint64_t p);

/// Sum of eval_A2_single over all admissible p, accumulated so that it
/// equals the term-by-term sum of the singles exactly.
double eval_A2_sum(const SieveParams& params, const arith::APClass& ap, unsigned shards = 1);

/// A3 = sum of Lambda_{a,q}(n) * (number of factorizations n+2 = p1 p2 p3
/// with z <= p1 <= x^{1/3} < p2 <= p3).
double eval_A3(const SieveParams& params, const arith::APClass& ap, unsigned shards = 1);

/// Sum over admissible p of the A1 sum restricted to p^2 | n+2.
double eval_A4_sum(const SieveParams& params, const arith::APClass& ap, unsigned shards = 1);

/// Left side of the target inequality: Lambda_{a,q}(n) weighted count of
/// n with n+2 almost prime and free of primes < z.
double eval_lhs(const SieveParams& params, const arith::APClass& ap, unsigned shards = 1);

/// Indicator weight b(n): 1 iff n lies in [x/2+2, x] and n = p1 p2 p3 with
/// x^{1/8} <= p1 <= x^{1/3} < p2 <= p3. Returns the count of admissible
/// ordered factorizations, which the size constraints force to 0 or 1.
int b_weight(uint64_t n, const SieveParams& params);
int b_weight(uint64_t n, const SieveParams& params, std::span<const primes::FactorEntry> factors);

/// Exact count of primes p <= x with p in the class and p in the Chen set.
uint64_t chen_count_ap(double x, const arith::APClass& ap, double exponent = 0.125,
                       bool exclude_small_primes = false, unsigned shards = 1);

/// Full report in one window pass. Byte-identical output for any shard
/// count (fixed segment grid, ordered reduction).
DecompositionReport decompose(const SieveParams& params, const arith::APClass& ap,
                              unsigned shards = 1);

} // namespace chensieve::decomp
