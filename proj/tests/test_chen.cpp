#include <doctest.h>

#include <cmath>

#include "chensieve/chen.hpp"
#include "chensieve/errors.hpp"
#include "chensieve/primes.hpp"
#include "oracles.hpp"

using namespace chensieve;
using namespace chensieve::chen;

TEST_CASE("classify examples") {
    auto prime = classify(13);
    CHECK(prime.kind == FactorKind::Prime);
    CHECK(prime.min_factor == 13);

    auto semi = classify(35);
    CHECK(semi.kind == FactorKind::Semiprime);
    CHECK(semi.parts[0] == 5);
    CHECK(semi.parts[1] == 7);

    auto triple = classify(105);
    CHECK(triple.kind == FactorKind::TripleProduct);
    CHECK(triple.parts[0] == 3);
    CHECK(triple.parts[1] == 5);
    CHECK(triple.parts[2] == 7);

    CHECK(classify(9).kind == FactorKind::Semiprime);     // 3*3, two factors
    CHECK(classify(16).kind == FactorKind::PrimePower);   // 2^4
    CHECK(classify(210).kind == FactorKind::Other);       // 2*3*5*7
    CHECK(classify(210).min_factor == 2);
    CHECK_THROWS_AS(classify(1), ValidationError);
}

TEST_CASE("classify agrees with trial division up to 10^6") {
    auto base = primes::sieve_primes(1001);
    primes::SegmentedRange range{2, 1'000'000, 1u << 18};
    auto fact = primes::factorize_interval(range, base);
    for (uint64_t n = 2; n <= 1'000'000; ++n) {
        auto fs = fact.factors(n);
        auto cls = classify(n, fs);
        uint32_t omega = primes::IntervalFactorization::big_omega(fs);
        FactorKind expect;
        if (omega == 1) expect = FactorKind::Prime;
        else if (omega == 2) expect = FactorKind::Semiprime;
        else if (omega == 3) expect = FactorKind::TripleProduct;
        else if (fs.size() == 1) expect = FactorKind::PrimePower;
        else expect = FactorKind::Other;
        if (cls.kind != expect || cls.min_factor != fs.front().prime) {
            CAPTURE(n);
            REQUIRE(cls.kind == expect);
            REQUIRE(cls.min_factor == fs.front().prime);
        }
    }
}

TEST_CASE("chen verdicts for small primes") {
    auto five = is_chen_prime(5);
    CHECK(five.is_chen);
    CHECK(five.branch == ChenBranch::Twin);

    auto seven = is_chen_prime(7); // 9 = 3*3 and 3^8 >= 7
    CHECK(seven.is_chen);
    CHECK(seven.branch == ChenBranch::QualifiedSemiprime);
    REQUIRE(seven.witness.has_value());
    CHECK(seven.witness->first == 3);
    CHECK(seven.witness->second == 3);

    // literal reading of the definition: 4 = 2*2 with 2^8 >= 2
    auto two = is_chen_prime(2);
    CHECK(two.branch == ChenBranch::QualifiedSemiprime);

    CHECK_THROWS_AS(is_chen_prime(8), ValidationError);
}

TEST_CASE("chen flag matches the brute-force census property up to 10^5") {
    for (uint64_t p = 2; p <= 100'000; ++p) {
        if (!oracle::is_prime(p)) continue;
        bool expect = oracle::chen_member(p);
        auto verdict = is_chen_prime(p);
        if (verdict.is_chen != expect) {
            CAPTURE(p);
            REQUIRE(verdict.is_chen == expect);
        }
        if (oracle::is_prime(p + 2)) REQUIRE(verdict.branch == ChenBranch::Twin);
    }
}

TEST_CASE("configurable exponent widens the semiprime branch") {
    // 131 + 2 = 133 = 7 * 19; 7 >= 131^{1/8} (7^8 = 5764801) but 7 < 131^{1/2}
    CHECK(is_chen_prime(131, 0.125).is_chen);
    CHECK_FALSE(is_chen_prime(131, 0.5).is_chen);
}

TEST_CASE("p2 indicator examples") {
    CHECK(p2_indicator(97, 100.0) == 1);
    CHECK(p2_indicator(95, 100.0) == 1);  // 5*19
    CHECK(p2_indicator(99, 100.0) == 0);  // 3^2 * 11
    CHECK_THROWS_AS(p2_indicator(21, 100.0), ValidationError);  // 21 <= 100^{2/3}
    CHECK_THROWS_AS(p2_indicator(101, 100.0), ValidationError);
}

TEST_CASE("minorant examples") {
    // prime in range: all three sums vanish
    CHECK(p2_minorant(97, 100.0).halves == 2);
    CHECK(p2_minorant(97, 100.0).value() == 1.0);

    // 902 = 2*11*41 at x = 1000: one small divisor, one qualifying triple
    auto v = p2_minorant(902, 1000.0);
    CHECK(v.value() == doctest::Approx(oracle::minorant(902, 1000.0)));
    CHECK(v.halves == 0); // 1 - 1/2 - 1/2

    // 961 = 31^2, 31 > 10: every sum empty
    CHECK(p2_minorant(961, 1000.0).value() == 1.0);
    CHECK(p2_indicator(961, 1000.0) == 1);
}

TEST_CASE("minorant equals the literal enumeration on a window") {
    const double x = 2000.0;
    for (uint64_t n = 160; n <= 2000; ++n)
        REQUIRE(p2_minorant(n, x).value() == doctest::Approx(oracle::minorant(n, x)).epsilon(1e-12));
}

TEST_CASE("minorant never exceeds the indicator (exhaustive, two scales)") {
    for (double x : {100.0, 1000.0}) {
        auto violations = verify_p2_minorant(x);
        CHECK(violations.empty());
    }
    // inequality stated exactly, in half-units
    const double x = 100'000.0;
    auto violations = verify_p2_minorant(x, 2);
    CHECK(violations.empty());
}
