#include "chensieve/arith.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "chensieve/errors.hpp"
#include "chensieve/util.hpp"

namespace chensieve::arith {

APClass::APClass(uint64_t a, uint64_t q) : a_(a), q_(q) {
    if (a < 1 || q < 1) throw ValidationError("APClass: a and q must be >= 1");
    if (std::gcd(a, q) != 1)
        throw ValidationError("APClass: gcd(a, q) must be 1 (progression must contain primes)");
    if (std::gcd(a + 2, q) != 1)
        throw ValidationError("APClass: gcd(a+2, q) must be 1 (shifted class must admit primes)");
}

double mangoldt(uint64_t n) {
    if (n < 1) throw ValidationError("mangoldt: n must be >= 1");
    if (n == 1) return 0.0;
    uint64_t p = primes::least_prime_factor(n);
    while (n % p == 0) n /= p;
    return n == 1 ? std::log((double)p) : 0.0;
}

double mangoldt(std::span<const primes::FactorEntry> factors) {
    return factors.size() == 1 ? std::log((double)factors.front().prime) : 0.0;
}

double mangoldt_aq(uint64_t n, const APClass& ap) {
    return ap.contains(n) ? mangoldt(n) : 0.0;
}

uint64_t phi2(uint64_t n) {
    if (n < 1) throw ValidationError("phi2: n must be >= 1");
    uint64_t result = 1;
    uint64_t m = n;
    while (m % 2 == 0) {
        uint64_t e = 0;
        while (m % 2 == 0) {
            m /= 2;
            ++e;
        }
        result <<= (e - 1); // 2^e * (1/2)
    }
    while (m > 1) {
        uint64_t p = primes::least_prime_factor(m);
        uint64_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (uint64_t i = 1; i < e; ++i) result *= p;
        result *= p - 2;
    }
    return result;
}

uint64_t totient(uint64_t n) {
    if (n < 1) throw ValidationError("totient: n must be >= 1");
    uint64_t result = 1;
    uint64_t m = n;
    while (m > 1) {
        uint64_t p = primes::least_prime_factor(m);
        uint64_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (uint64_t i = 1; i < e; ++i) result *= p;
        result *= p - 1;
    }
    return result;
}

int mobius(uint64_t n) {
    if (n < 1) throw ValidationError("mobius: n must be >= 1");
    int sign = 1;
    uint64_t m = n;
    while (m > 1) {
        uint64_t p = primes::least_prime_factor(m);
        m /= p;
        if (m % p == 0) return 0;
        sign = -sign;
    }
    return sign;
}

double pi2_constant(double tolerance) {
    if (!(tolerance > 0.0) || tolerance > 0.5)
        throw ValidationError("pi2_constant: tolerance must be in (0, 0.5]");
    // tail bound: sum_{p > P} 1/(p-1)^2 <= integral comparison 1/(P-1)
    double needed = 2.0 / tolerance + 2.0;
    if (needed > (double)configured_max())
        throw ResourceError("pi2_constant: tolerance needs primes beyond the configured maximum");
    return pi2_partial((uint64_t)needed);
}

double pi2_partial(uint64_t truncation_prime) {
    if (truncation_prime < 3) throw ValidationError("pi2_partial: truncation must be >= 3");
    auto table = primes::sieve_primes(truncation_prime);
    double prod = 1.0;
    for (uint64_t p : table.primes) {
        if (p == 2) continue;
        double u = (double)(p - 1);
        prod *= 1.0 - 1.0 / (u * u);
    }
    return prod;
}

double mertens_V(double z, const SieveDensity& density) {
    if (!(z >= 3.0)) throw ValidationError("mertens_V: z must be >= 3");
    uint64_t below = detail::ceil_to_u64((long double)z) - 1; // largest integer < z
    if (below > configured_max())
        throw ResourceError("mertens_V: z beyond prime-table capacity");
    auto table = primes::sieve_primes(below);
    double prod = 1.0;
    for (uint64_t p : table.primes) prod *= 1.0 - density.h(p);
    return prod;
}

} // namespace chensieve::arith
