#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chensieve/primes.hpp"

namespace chensieve::chen {

/// Factor profile of n. Classification goes by the number of prime factors
/// counted with multiplicity: 1 -> Prime, 2 -> Semiprime (p^2 included),
/// 3 -> TripleProduct (p^3 included); only pure powers p^k with k >= 4
/// land in PrimePower, everything else in Other.
enum class FactorKind { Prime, Semiprime, TripleProduct, PrimePower, Other };

struct FactorClassification {
    uint64_t n = 0;
    FactorKind kind = FactorKind::Other;
    uint64_t min_factor = 0;
    /// Prime: {n,0,0}; Semiprime: {p1,p2,0} with p1 <= p2;
    /// TripleProduct: {p1,p2,p3} sorted; PrimePower: {p,k,0}.
    std::array<uint64_t, 3> parts{0, 0, 0};
};

FactorClassification classify(uint64_t n);
FactorClassification classify(uint64_t n, std::span<const primes::FactorEntry> factors);

enum class ChenBranch { Twin, QualifiedSemiprime, NotChen };

struct ChenVerdict {
    uint64_t p = 0;
    bool is_chen = false;
    ChenBranch branch = ChenBranch::NotChen;
    std::optional<std::pair<uint64_t, uint64_t>> witness; // (p1, p2) when semiprime
};

/// Membership of the prime p in the Chen class: p+2 prime (Twin) or
/// p+2 = p1*p2 with p1, p2 >= p^exponent (QualifiedSemiprime).
/// With the default exponent 1/8 the factor-floor comparison is done as
/// p1^8 >= p in 128-bit integer arithmetic; floating-point roots would
/// misclassify boundary cases.
ChenVerdict is_chen_prime(uint64_t p, double exponent = 0.125);

/// Branch decision from a precomputed factor profile of p+2 (fast path
/// for census scans; p is assumed prime).
ChenBranch chen_branch_from_factors(uint64_t p, std::span<const primes::FactorEntry> plus2_factors,
                                    double exponent = 0.125);

/// 1 iff n has at most two prime factors with multiplicity.
/// Domain: x^{2/3} < n <= x (ValidationError outside).
int p2_indicator(uint64_t n, double x);

/// Exact dyadic rational (stored in half-units, so comparisons stay exact).
struct HalfInteger {
    int64_t halves = 0;
    double value() const { return 0.5 * (double)halves; }
};

/// Case-analysis minorant of the almost-prime indicator on (x^{2/3}, x]:
///   1 - (1/2)#{p <= x^{1/3} : p|n}
///     - (1/2)[n = p1 p2 p3 with p1 <= x^{1/3} < p2 <= p3]
///     -       #{p <= x^{1/3} : p^2|n}.
HalfInteger p2_minorant(uint64_t n, double x);
HalfInteger p2_minorant(uint64_t n, double x, std::span<const primes::FactorEntry> factors);

/// Scans every n in (x^{2/3}, x] and returns the n where the indicator
/// drops below the minorant. Contract: empty.
std::vector<uint64_t> verify_p2_minorant(double x, unsigned shards = 1);

} // namespace chensieve::chen
