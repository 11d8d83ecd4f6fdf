#pragma once

#include <cstdint>
#include <span>

#include "chensieve/primes.hpp"

namespace chensieve::arith {

/// Euler-Mascheroni constant, stored rather than computed.
inline constexpr double kEulerGamma = 0.577215664901532860606512090082;

/// A residue class a (mod q) admissible for shifted-prime counting:
/// both a and a+2 must be coprime to q. Enforced at construction.
class APClass {
public:
    APClass(uint64_t a, uint64_t q); // throws ValidationError

    uint64_t a() const { return a_; }
    uint64_t q() const { return q_; }
    bool contains(uint64_t n) const { return n % q_ == a_ % q_; }

private:
    uint64_t a_;
    uint64_t q_;
};

/// The linear-sieve density used throughout: g(2) = 0, g(p) = 1/(p-1) for
/// odd p, and h(p) = g(p) zeroed out on primes dividing q. Only evaluation
/// at primes matters; all summations elsewhere filter squarefree moduli.
struct SieveDensity {
    uint64_t q = 1;

    double g(uint64_t p) const { return p == 2 ? 0.0 : 1.0 / (double)(p - 1); }
    double h(uint64_t p) const { return q % p == 0 ? 0.0 : g(p); }
};

/// von Mangoldt: log p when n = p^k, else 0 (and 0 at n = 1).
double mangoldt(uint64_t n);

/// Fast path over a precomputed factor list.
double mangoldt(std::span<const primes::FactorEntry> factors);

/// Lambda restricted to the class a (mod q).
double mangoldt_aq(uint64_t n, const APClass& ap);

/// phi2(n) = n * prod_{p|n, p odd} (1 - 2/p) * (1 - [2|n]/2), evaluated in
/// exact integer arithmetic as prod p^{e-1}(p-2) over odd p times 2^{e-1}.
/// It sits in denominators of report ratios, so no floating error allowed.
uint64_t phi2(uint64_t n);

/// Euler totient.
uint64_t totient(uint64_t n);

/// Moebius function in {-1, 0, 1}.
int mobius(uint64_t n);

/// Twin-prime constant prod_{p>2} (1 - 1/(p-1)^2) within `tolerance`.
/// Truncates at P with the certified tail bound sum_{p>P} 1/(p-1)^2
/// <= 1/(P-1) < tolerance/2.
double pi2_constant(double tolerance);

/// Partial product over odd primes <= truncation_prime (self-consistency
/// probe for the truncation above).
double pi2_partial(uint64_t truncation_prime);

/// V(z) = prod_{p<z} (1 - h(p)), exact finite product in ascending order.
double mertens_V(double z, const SieveDensity& density);

} // namespace chensieve::arith
