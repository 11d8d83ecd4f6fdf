#include <doctest.h>

#include <cmath>
#include <numeric>

#include "chensieve/arith.hpp"
#include "chensieve/errors.hpp"
#include "oracles.hpp"

using namespace chensieve;
using namespace chensieve::arith;

TEST_CASE("APClass enforces both coprimality conditions") {
    CHECK_NOTHROW(APClass(2, 3));
    CHECK_NOTHROW(APClass(1, 1));
    CHECK_NOTHROW(APClass(1, 4));
    CHECK_THROWS_AS(APClass(3, 6), ValidationError);  // gcd(a, q) = 3
    CHECK_THROWS_AS(APClass(1, 3), ValidationError);  // gcd(a+2, q) = 3
    CHECK_THROWS_AS(APClass(3, 5), ValidationError);  // gcd(a+2, q) = 5
    CHECK_THROWS_AS(APClass(0, 3), ValidationError);

    APClass ap(4, 5);
    CHECK(ap.contains(9));
    CHECK_FALSE(ap.contains(10));
}

TEST_CASE("mangoldt examples") {
    CHECK(mangoldt(8) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(mangoldt(6) == 0.0);
    CHECK(mangoldt(1) == 0.0);
    CHECK(mangoldt(97) == doctest::Approx(std::log(97.0)).epsilon(1e-15));
}

TEST_CASE("mangoldt_aq restriction") {
    // 8 = 2^3 lies in 2 mod 3; 9 = 3^2 lies in 4 mod 5
    CHECK(mangoldt_aq(8, APClass(2, 3)) == doctest::Approx(std::log(2.0)));
    CHECK(mangoldt_aq(7, APClass(2, 3)) == 0.0); // 7 = 1 mod 3
    CHECK(mangoldt_aq(9, APClass(4, 5)) == doctest::Approx(std::log(3.0)));
}

TEST_CASE("chebyshev identity: sum of mangoldt over divisors is log n") {
    for (uint64_t n = 1; n <= 10'000; ++n) {
        double sum = 0;
        for (uint64_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            sum += mangoldt(d);
            if (d != n / d) sum += mangoldt(n / d);
        }
        REQUIRE(sum == doctest::Approx(std::log((double)n)).epsilon(1e-9));
    }
}

TEST_CASE("phi2 examples and exactness") {
    CHECK(phi2(1) == 1);
    CHECK(phi2(2) == 1);
    CHECK(phi2(15) == 3);
    CHECK(phi2(4) == 2);
    CHECK(phi2(3) == 1);
}

TEST_CASE("phi2 equals the direct rational evaluation for q <= 10^4") {
    for (uint64_t q = 1; q <= 10'000; ++q) {
        // n * prod (1 - 2/p) * (1 - [2|n]/2) as an exact fraction
        unsigned __int128 num = q;
        unsigned __int128 den = 1;
        for (auto& [p, e] : oracle::factorize(q)) {
            if (p == 2) {
                num *= 1;
                den *= 2;
            } else {
                num *= p - 2;
                den *= p;
            }
        }
        REQUIRE(num % den == 0);
        REQUIRE(phi2(q) == (uint64_t)(num / den));
    }
}

TEST_CASE("phi2 multiplicative on odd coprime arguments") {
    for (uint64_t m = 1; m <= 200; m += 2)
        for (uint64_t n = 1; n <= 200; n += 2) {
            if (std::gcd(m, n) != 1) continue;
            REQUIRE(phi2(m * n) == phi2(m) * phi2(n));
        }
}

TEST_CASE("mobius examples") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(7) == -1);
}

TEST_CASE("twin constant truncations") {
    CHECK(pi2_partial(3) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(std::fabs(pi2_constant(1e-2) - 0.66) < 0.01);

    // successive truncations differ by less than the certified tail bound
    for (uint64_t P : {1000ull, 10'000ull, 100'000ull}) {
        double a = pi2_partial(P);
        double b = pi2_partial(2 * P);
        CHECK(std::fabs(a - b) < 1.0 / (double)(P - 1));
        CHECK(b <= a); // factors below 1: monotone decreasing in the cutoff
        CHECK(a > 0.6);
    }

    // tolerance-level self consistency across a doubled truncation point
    double v1 = pi2_constant(1e-6);
    double v2 = pi2_partial(2 * (uint64_t)(2.0 / 1e-6 + 2.0));
    CHECK(std::fabs(v1 - v2) < 1e-6);

    CHECK_THROWS_AS(pi2_constant(0.0), ValidationError);
    CHECK_THROWS_AS(pi2_constant(1e-12), ResourceError);
}

TEST_CASE("mertens_V examples") {
    SieveDensity q1{1};
    CHECK(mertens_V(3.0, q1) == 1.0);
    CHECK(mertens_V(6.0, q1) == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
    CHECK_THROWS_AS(mertens_V(2.0, q1), ValidationError);

    // direct product vs asymptotic main term at z = 1e4
    double V = mertens_V(1e4, q1);
    double pi2 = pi2_constant(1e-7);
    double ratio = V * std::exp(kEulerGamma) * std::log(1e4) / (2.0 * pi2);
    CHECK(std::fabs(ratio - 1.0) < 0.05);
}

TEST_CASE("mertens_V q-factor identity") {
    const double z = 100.0;
    double base = mertens_V(z, SieveDensity{1});
    for (uint64_t q : {3ull, 5ull, 15ull}) {
        double expected = base;
        for (auto& [p, e] : oracle::factorize(q))
            if (p > 2 && (double)p < z) expected /= 1.0 - 1.0 / (double)(p - 1);
        CHECK(mertens_V(z, SieveDensity{q}) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("sieve density evaluations") {
    SieveDensity d{15};
    CHECK(d.g(2) == 0.0);
    CHECK(d.g(3) == doctest::Approx(0.5));
    CHECK(d.g(5) == doctest::Approx(0.25));
    CHECK(d.h(3) == 0.0); // 3 | 15
    CHECK(d.h(5) == 0.0);
    CHECK(d.h(7) == doctest::Approx(1.0 / 6.0));
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 101ull}) {
        CHECK(d.h(p) >= 0.0);
        CHECK(d.h(p) < 1.0);
    }
}
