#include "chensieve/sieve_theory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chensieve/errors.hpp"
#include "chensieve/primes.hpp"
#include "chensieve/util.hpp"

namespace chensieve::sieve_theory {

namespace {

constexpr double kEpsilonCap = 1.0 / 200.0;

void validate_jr_input(const JRInput& in) {
    if (!(in.X > 0)) throw ValidationError("JRInput: X must be > 0");
    if (!(in.V_z > 0 && in.V_z <= 1)) throw ValidationError("JRInput: V_z must be in (0, 1]");
    if (!(in.epsilon >= 0 && in.epsilon < kEpsilonCap))
        throw ValidationError("JRInput: epsilon must be in [0, 1/200)");
    if (!(in.remainder_sum >= 0)) throw ValidationError("JRInput: remainder_sum must be >= 0");
    if (!(in.alpha_abs >= 0)) throw ValidationError("JRInput: alpha_abs must be >= 0");
}

} // namespace

double linear_sieve_F(double s) {
    if (!(s > 0)) throw ValidationError("linear_sieve_F: s must be > 0");
    return 2.0 * std::exp(arith::kEulerGamma) / s;
}

double linear_sieve_f(double s) {
    if (!(s > 1)) throw ValidationError("linear_sieve_f: s must be > 1");
    return 2.0 * std::exp(arith::kEulerGamma) * std::log(s - 1.0) / s;
}

double jurkat_richert_upper(const JRInput& in) {
    validate_jr_input(in);
    if (!(in.s > 1 && in.s <= 3))
        throw ValidationError("jurkat_richert_upper: valid for 1 < s <= 3");
    return (linear_sieve_F(in.s) + in.epsilon * std::exp(14.0 - in.s)) * in.X * in.V_z +
           in.remainder_sum + in.alpha_abs;
}

double jurkat_richert_lower(const JRInput& in) {
    validate_jr_input(in);
    if (!(in.s >= 2 && in.s <= 4))
        throw ValidationError("jurkat_richert_lower: valid for 2 <= s <= 4");
    return (linear_sieve_f(in.s) - in.epsilon * std::exp(14.0 - in.s)) * in.X * in.V_z -
           in.remainder_sum - in.alpha_abs;
}

bool check_density_condition(const arith::SieveDensity& density, double u, double z,
                             std::span<const uint64_t> excluded_primes, double epsilon) {
    if (!(u >= 2 && u < z)) throw ValidationError("check_density_condition: need 2 <= u < z");
    double rhs = (1.0 + epsilon) * std::log(z) / std::log(u);
    uint64_t below = detail::ceil_to_u64((long double)z) - 1;
    if (below > configured_max())
        throw ResourceError("check_density_condition: z beyond prime-table capacity");
    auto table = primes::sieve_primes(std::max<uint64_t>(below, 2));
    double prod = 1.0;
    for (uint64_t p : table.primes) {
        if ((double)p < u || (double)p >= z) continue;
        if (std::find(excluded_primes.begin(), excluded_primes.end(), p) != excluded_primes.end())
            continue;
        prod /= 1.0 - density.h(p);
    }
    return prod < rhs;
}

quadrature::QuadResult a2_kernel_integral_quad(double tol) {
    return quadrature::integrate([](double t) { return 1.0 / ((4.0 - t) * t); }, 1.0, 8.0 / 3.0,
                                 tol);
}

double a2_kernel_integral() {
    // antiderivative of 1/((4-t)t) is (1/4) log(t/(4-t))
    double closed = std::log(6.0) / 4.0;
    double quad = a2_kernel_integral_quad().value;
    if (std::fabs(closed - quad) > 1e-10)
        throw NumericalError("a2_kernel_integral: closed form and quadrature disagree");
    return closed;
}

quadrature::QuadResult triple_product_integral(double tolerance) {
    if (!(tolerance > 0) || tolerance > 1e-3)
        throw ValidationError("triple_product_integral: tolerance must be in (0, 1e-3]");
    return quadrature::integrate(
        [](double t1) { return std::log(2.0 - 3.0 * t1) / (t1 * (1.0 - t1)); }, 0.125, 1.0 / 3.0,
        tolerance);
}

quadrature::QuadResult triple_product_integral_2d(double tolerance) {
    if (!(tolerance > 0) || tolerance > 1e-3)
        throw ValidationError("triple_product_integral_2d: tolerance must be in (0, 1e-3]");
    return quadrature::integrate_2d(
        [](double t1, double t2) { return 1.0 / (t1 * t2 * (1.0 - t1 - t2)); }, 0.125, 1.0 / 3.0,
        [](double) { return 1.0 / 3.0; }, [](double t1) { return 0.5 * (1.0 - t1); }, tolerance);
}

double mertens_asymptotic_ratio(double z, uint64_t q) {
    if (!(z >= 10)) throw ValidationError("mertens_asymptotic_ratio: z must be >= 10");
    arith::SieveDensity density{q};
    double V = arith::mertens_V(z, density);
    double pi2 = arith::pi2_constant(1e-7);
    double main = 2.0 * pi2 / (std::exp(arith::kEulerGamma) * std::log(z));
    // q-correction: h(p) = 0 on p | q removes (1 - 1/(p-1)) factors
    uint64_t m = q;
    while (m % 2 == 0) m /= 2;
    while (m > 1) {
        uint64_t p = primes::least_prime_factor(m);
        while (m % p == 0) m /= p;
        main /= 1.0 - 1.0 / (double)(p - 1);
    }
    return V / main;
}

CatalogFunction catalog_function_from_name(std::string_view name) {
    if (name == "window") return CatalogFunction::Window;
    if (name == "a2-kernel" || name == "a2_kernel") return CatalogFunction::A2Kernel;
    if (name == "triple-region" || name == "triple_region") return CatalogFunction::TripleRegion;
    throw ValidationError("unknown catalog function: " + std::string(name));
}

SumIntegralPair prime_sum_integral_check(CatalogFunction f, double x) {
    if (!(x >= 100)) throw ValidationError("prime_sum_integral_check: x must be >= 100");
    const double L = std::log(x);
    SumIntegralPair out;

    if (f == CatalogFunction::Window || f == CatalogFunction::A2Kernel) {
        uint64_t cap = detail::floor_to_u64(std::cbrt((long double)x)) + 2;
        auto table = primes::sieve_primes(std::max<uint64_t>(cap, 3));
        detail::Kahan sum;
        for (uint64_t p : table.primes) {
            double t = std::log((double)p) / L;
            if (t < 0.125 || t > 1.0 / 3.0) continue;
            double ft = f == CatalogFunction::Window ? 1.0 : linear_sieve_F(4.0 - 8.0 * t);
            sum.add(ft / (double)p);
        }
        out.prime_sum = sum.value();
        out.integral = f == CatalogFunction::Window
                           ? std::log(8.0 / 3.0)
                           : 2.0 * std::exp(arith::kEulerGamma) * a2_kernel_integral();
        return out;
    }

    // planar entry: sum over pairs (p1, p2)
    uint64_t cap = detail::floor_to_u64(std::pow((long double)x, 0.5L)) + 2;
    auto table = primes::sieve_primes(std::max<uint64_t>(cap, 3));
    detail::Kahan sum;
    for (uint64_t p1 : table.primes) {
        double t1 = std::log((double)p1) / L;
        if (t1 < 0.125 || t1 > 1.0 / 3.0) continue;
        for (uint64_t p2 : table.primes) {
            double t2 = std::log((double)p2) / L;
            if (t2 <= 1.0 / 3.0) continue;
            double rem = 1.0 - t1 - t2;
            if (!(t2 < rem)) break; // t2 ascending: once violated, stays violated
            sum.add(1.0 / ((double)p1 * (double)p2 * rem));
        }
    }
    out.prime_sum = sum.value();
    out.integral = triple_product_integral(1e-8).value;
    return out;
}

ConstantBundle headline_constants(double tolerance) {
    if (!(tolerance > 0) || tolerance > 1e-3)
        throw ValidationError("headline_constants: tolerance must be in (0, 1e-3]");
    ConstantBundle b;
    b.gamma = arith::kEulerGamma;
    b.pi2 = arith::pi2_constant(tolerance);
    b.c_A1 = 4.0 * std::log(3.0);
    b.c_A2 = 4.0 * std::log(6.0);
    b.I_A2 = a2_kernel_integral();
    auto i3 = triple_product_integral(std::min(tolerance, 1e-6));
    b.I_A3 = i3.value;
    b.I_A3_error = i3.error_bound;
    b.c_A3 = 4.0 * b.I_A3;
    b.net = b.c_A1 - b.c_A2 / 2.0 - b.c_A3 / 2.0;
    return b;
}

} // namespace chensieve::sieve_theory
