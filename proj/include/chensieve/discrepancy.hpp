#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "chensieve/decomp.hpp"

namespace chensieve::discrepancy {

/// Weights whose distribution over residue classes is measured:
///   LambdaFull:   Lambda(n) on [1, x]
///   LambdaWindow: Lambda(n) on [x/2, x-2]
///   BWeight:      b(n) (triple-product indicator supported on [x/2+2, x])
enum class WeightId { LambdaFull, LambdaWindow, BWeight };

WeightId weight_from_name(std::string_view name); // ValidationError on unknown id
std::string_view weight_name(WeightId w);

struct DiscrepancyRow {
    uint64_t d = 1;
    uint64_t worst_a = 1;   // coprime residue attaining the max (smallest on ties)
    double delta_abs = 0.0;
};

struct BVSummary {
    double x = 0;
    double D = 0;
    double total = 0;           // sum over d <= D of max_a |Delta(f; a (d))|
    WeightId weight = WeightId::LambdaFull;
    double noncoprime_mass = 0; // sum over d <= D of the weight mass on gcd(n,d) > 1
};

/// Signed discrepancy Delta(f; a (d)) = sum_{n = a (d)} f(n)
///   - (1/phi(d)) sum_{(n,d)=1} f(n). Requires gcd(a, d) = 1.
double delta(WeightId weight, double x, uint64_t a, uint64_t d);

/// Signed deltas for every coprime residue of one modulus, in one stream.
std::vector<std::pair<uint64_t, double>> delta_row(WeightId weight, double x, uint64_t d);

/// Per-modulus worst discrepancies for every d <= D.
std::vector<DiscrepancyRow> bv_rows(double x, double D, WeightId weight);

/// Aggregated per-modulus maxima (the Bombieri-Vinogradov style total).
BVSummary bv_sum(double x, double D, WeightId weight);

/// |psi(x; d, a) - x/phi(d)|: the uniform prime-counting residual.
double sw_residual(double x, uint64_t a, uint64_t d);

/// Residue c mod (m1*m2) with c = r1 (m1), c = r2 (m2); moduli coprime.
/// Used when conditioning window discrepancies on a fixed class mod q.
uint64_t crt_residue(uint64_t r1, uint64_t m1, uint64_t r2, uint64_t m2);

} // namespace chensieve::discrepancy
