#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "chensieve/arith.hpp"
#include "chensieve/quadrature.hpp"

namespace chensieve::sieve_theory {

/// The headline constants of the decomposition. c_A1 and c_A2 are the
/// closed forms 4 log 3 and 4 log 6; c_A3 = 4 * I_A3 where I_A3 is the
/// planar integral over {1/8 <= t1 <= 1/3 < t2 < 1-t1-t2} of
/// 1/(t1 t2 (1-t1-t2)); net = c_A1 - c_A2/2 - c_A3/2 must stay positive.
struct ConstantBundle {
    double gamma = 0;
    double pi2 = 0;
    double c_A1 = 0;
    double c_A2 = 0;
    double I_A2 = 0; // integral over [1, 8/3] of dt/((4-t)t) = log(6)/4
    double I_A3 = 0;
    double I_A3_error = 0; // certified quadrature bound for I_A3
    double c_A3 = 0;
    double net = 0;
};

/// Linear-sieve upper function F(s) = 2 e^gamma / s, valid here for s > 0.
double linear_sieve_F(double s);

/// Linear-sieve lower function f(s) = 2 e^gamma log(s-1) / s, s > 1.
double linear_sieve_f(double s);

/// Inputs of the two-sided linear-sieve bound.
struct JRInput {
    double X = 0;             // main-term scale, > 0
    double V_z = 0;           // product V(z), in (0, 1]
    double s = 0;             // log D / log z
    double epsilon = 0;       // density-condition slack, in [0, 1/200)
    double remainder_sum = 0; // sum over squarefree d <= QD of |r_d|
    double alpha_abs = 0;     // |alpha| for the shifted classes
};

/// Upper bound (F(s) + eps e^{14-s}) X V(z) + remainder + |alpha|,
/// valid for 1 < s <= 3.
double jurkat_richert_upper(const JRInput& input);

/// Lower bound (f(s) - eps e^{14-s}) X V(z) - remainder - |alpha|,
/// valid for 2 <= s <= 4. A lower bound can only lose by subtracting the
/// remainder, so the conservative sign is used.
double jurkat_richert_lower(const JRInput& input);

/// Density ratio condition: prod over primes p in [u, z) outside the
/// excluded set of (1 - h(p))^{-1} < (1 + epsilon) log z / log u.
bool check_density_condition(const arith::SieveDensity& density, double u, double z,
                             std::span<const uint64_t> excluded_primes, double epsilon);

/// Closed form log(6)/4 of the A2 kernel integral, cross-checked against
/// adaptive quadrature to 1e-10 (NumericalError on disagreement).
double a2_kernel_integral();

/// Quadrature route for the same integral (the independent side of the check).
quadrature::QuadResult a2_kernel_integral_quad(double tol = 1e-12);

/// Planar integral of 1/(t1 t2 (1-t1-t2)) over {1/8 <= t1 <= 1/3 < t2 <
/// 1-t1-t2} via the reduced 1-D form: integrating out t2 gives
/// log(2-3 t1)/(1-t1), leaving the integral over [1/8, 1/3] of
/// log(2-3 t1)/(t1 (1-t1)). The reduction is verified against direct 2-D
/// quadrature in the tests.
quadrature::QuadResult triple_product_integral(double tolerance);

/// Direct 2-D route (oracle for the reduction above).
quadrature::QuadResult triple_product_integral_2d(double tolerance);

/// Ratio of the exact product V(z) to its Mertens-type main term
/// 2 Pi2 / (e^gamma log z) * prod_{p|q, p odd} (1 - 1/(p-1))^{-1}.
/// Tends to 1 as z grows.
double mertens_asymptotic_ratio(double z, uint64_t q);

/// Built-in catalog for the prime-sum vs integral limit check:
///   window:        f(t)     = 1 on [1/8, 1/3]
///   a2_kernel:     f(t)     = F(4 - 8t) on [1/8, 1/3]
///   triple_region: f(t1,t2) = 1/(1-t1-t2) on {1/8<=t1<=1/3<t2<1-t1-t2}
enum class CatalogFunction { Window, A2Kernel, TripleRegion };

CatalogFunction catalog_function_from_name(std::string_view name); // ValidationError on unknown id

struct SumIntegralPair {
    double prime_sum = 0;
    double integral = 0;
};

/// Evaluates sum over primes of f(log p / log x)/p (or the double-sum
/// analog for the planar entry) next to the corresponding integral of
/// f(t) dt/t. The sum tends to the integral as x grows.
SumIntegralPair prime_sum_integral_check(CatalogFunction f, double x);

/// Assembles the bundle; pi2 and I_A3 are computed to `tolerance`.
ConstantBundle headline_constants(double tolerance = 1e-8);

} // namespace chensieve::sieve_theory
