#include "chensieve/discrepancy.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "chensieve/arith.hpp"
#include "chensieve/errors.hpp"
#include "chensieve/util.hpp"

namespace chensieve::discrepancy {

namespace {

using detail::floor_to_u64;

/// Streams (n, f(n)) over the weight support in ascending n. The stream
/// order is fixed, so every consumer below is exactly reproducible.
template <class Fn>
void for_each_weighted(WeightId weight, double x, Fn&& fn) {
    if (!(x >= 10)) throw ValidationError("weight stream: x must be >= 10");
    if (x > (double)configured_max())
        throw ResourceError("weight stream: x beyond configured maximum");
    uint64_t lo = 2, hi = floor_to_u64((long double)x);
    decomp::SieveParams params; // only needed for the window weights
    if (weight != WeightId::LambdaFull) {
        params = decomp::SieveParams::from_x(x);
        lo = params.window_lo;
        hi = weight == WeightId::LambdaWindow ? params.window_hi : hi;
    }
    if (lo > hi) return;
    auto base = primes::sieve_primes(std::max<uint64_t>((uint64_t)std::sqrt((double)hi) + 2, 2));
    const uint64_t seg = 1u << 18;
    for (uint64_t s_lo = lo; s_lo <= hi; s_lo += seg) {
        uint64_t s_hi = std::min(hi, s_lo + seg - 1);
        auto fact = primes::factorize_segment(s_lo, s_hi, base);
        for (uint64_t n = s_lo; n <= s_hi; ++n) {
            auto fs = fact.factors(n);
            double w;
            if (weight == WeightId::BWeight)
                w = (double)decomp::b_weight(n, params, fs);
            else
                w = arith::mangoldt(fs);
            if (w != 0.0) fn(n, w);
        }
        if (s_hi == hi) break;
    }
}

struct BVData {
    std::vector<DiscrepancyRow> rows;
    double noncoprime_mass = 0;
};

BVData compute_bv(double x, double D, WeightId weight) {
    if (!(D >= 1)) throw ValidationError("bv: D must be >= 1");
    uint64_t Dmax = floor_to_u64((long double)D);
    require_memory(Dmax * (Dmax + 1) / 2 * sizeof(double) + Dmax * sizeof(DiscrepancyRow),
                   "bv accumulators");

    std::vector<std::vector<double>> sums(Dmax + 1);
    for (uint64_t d = 1; d <= Dmax; ++d) sums[d].assign(d, 0.0);
    double total_mass = 0.0;
    for_each_weighted(weight, x, [&](uint64_t n, double w) {
        total_mass += w;
        for (uint64_t d = 1; d <= Dmax; ++d) sums[d][n % d] += w;
    });

    BVData out;
    out.rows.reserve(Dmax);
    detail::Kahan noncoprime;
    for (uint64_t d = 1; d <= Dmax; ++d) {
        double coprime_total = 0.0;
        uint64_t phi = 0;
        for (uint64_t r = 0; r < d; ++r) {
            if (std::gcd(r, d) != 1) continue;
            coprime_total += sums[d][r];
            ++phi;
        }
        DiscrepancyRow row;
        row.d = d;
        double mean = coprime_total / (double)phi;
        for (uint64_t a = 1; a <= d; ++a) {
            if (std::gcd(a, d) != 1) continue;
            double dev = std::fabs(sums[d][a % d] - mean);
            if (dev > row.delta_abs) {
                row.delta_abs = dev;
                row.worst_a = a;
            }
        }
        noncoprime.add(total_mass - coprime_total);
        out.rows.push_back(row);
    }
    out.noncoprime_mass = noncoprime.value();
    return out;
}

} // namespace

WeightId weight_from_name(std::string_view name) {
    if (name == "lambda-full") return WeightId::LambdaFull;
    if (name == "lambda-window") return WeightId::LambdaWindow;
    if (name == "b") return WeightId::BWeight;
    throw ValidationError("unknown weight: " + std::string(name) +
                          " (expected lambda-full, lambda-window or b)");
}

std::string_view weight_name(WeightId w) {
    switch (w) {
        case WeightId::LambdaFull: return "lambda-full";
        case WeightId::LambdaWindow: return "lambda-window";
        default: return "b";
    }
}

double delta(WeightId weight, double x, uint64_t a, uint64_t d) {
    if (d < 1 || a < 1 || a > d) throw ValidationError("delta: need 1 <= a <= d");
    if (std::gcd(a, d) != 1) throw ValidationError("delta: gcd(a, d) must be 1");
    for (auto& [res, dev] : delta_row(weight, x, d))
        if (res == a) return dev;
    throw NumericalError("delta: residue not found"); // unreachable
}

std::vector<std::pair<uint64_t, double>> delta_row(WeightId weight, double x, uint64_t d) {
    if (d < 1) throw ValidationError("delta_row: d must be >= 1");
    std::vector<double> class_sum(d, 0.0);
    for_each_weighted(weight, x, [&](uint64_t n, double w) { class_sum[n % d] += w; });
    double coprime_total = 0.0;
    uint64_t phi = 0;
    for (uint64_t r = 0; r < d; ++r) {
        if (std::gcd(r, d) != 1) continue;
        coprime_total += class_sum[r];
        ++phi;
    }
    double mean = coprime_total / (double)phi;
    std::vector<std::pair<uint64_t, double>> row;
    row.reserve(phi);
    for (uint64_t a = 1; a <= d; ++a)
        if (std::gcd(a, d) == 1) row.emplace_back(a, class_sum[a % d] - mean);
    return row;
}

std::vector<DiscrepancyRow> bv_rows(double x, double D, WeightId weight) {
    return compute_bv(x, D, weight).rows;
}

BVSummary bv_sum(double x, double D, WeightId weight) {
    BVData data = compute_bv(x, D, weight);
    BVSummary s;
    s.x = x;
    s.D = D;
    s.weight = weight;
    s.noncoprime_mass = data.noncoprime_mass;
    detail::Kahan total;
    for (const auto& row : data.rows) total.add(row.delta_abs);
    s.total = total.value();
    return s;
}

double sw_residual(double x, uint64_t a, uint64_t d) {
    if (d < 1 || a < 1 || a > d) throw ValidationError("sw_residual: need 1 <= a <= d");
    if (std::gcd(a, d) != 1) throw ValidationError("sw_residual: gcd(a, d) must be 1");
    detail::Kahan psi;
    for_each_weighted(WeightId::LambdaFull, x, [&](uint64_t n, double w) {
        if (n % d == a % d) psi.add(w);
    });
    return std::fabs(psi.value() - x / (double)arith::totient(d));
}

uint64_t crt_residue(uint64_t r1, uint64_t m1, uint64_t r2, uint64_t m2) {
    if (m1 < 1 || m2 < 1 || std::gcd(m1, m2) != 1)
        throw ValidationError("crt_residue: moduli must be coprime and >= 1");
    uint64_t m = m1 * m2;
    for (uint64_t c = r2 % m2; c < r2 % m2 + m; c += m2)
        if (c % m1 == r1 % m1) {
            uint64_t r = c % m;
            return r == 0 ? m : r; // class representatives live in [1, m]
        }
    throw NumericalError("crt_residue: no solution found");
}

} // namespace chensieve::discrepancy
