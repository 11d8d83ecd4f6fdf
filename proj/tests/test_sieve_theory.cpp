#include <doctest.h>

#include <cmath>
#include <random>

#include "chensieve/errors.hpp"
#include "chensieve/sieve_theory.hpp"

using namespace chensieve;
using namespace chensieve::sieve_theory;

namespace {
const double kEg = std::exp(arith::kEulerGamma);
}

TEST_CASE("linear sieve F and f closed forms") {
    CHECK(linear_sieve_F(2.0) == doctest::Approx(kEg).epsilon(1e-15));
    CHECK(linear_sieve_f(2.0) == 0.0);
    CHECK(linear_sieve_f(4.0) == doctest::Approx(kEg / 2.0 * std::log(3.0)).epsilon(1e-15));
    CHECK_THROWS_AS(linear_sieve_F(0.0), ValidationError);
    CHECK_THROWS_AS(linear_sieve_f(1.0), ValidationError);
}

TEST_CASE("F decreasing, f increasing, F dominates on the shared window") {
    double prev_F = linear_sieve_F(0.01);
    for (int i = 1; i <= 1000; ++i) {
        double s = 0.01 + 6.0 * i / 1000.0;
        double F = linear_sieve_F(s);
        CHECK(F < prev_F);
        prev_F = F;
    }
    double prev_f = linear_sieve_f(1.0 + 1e-9);
    for (int i = 1; i <= 1000; ++i) {
        double s = 1.0 + (std::exp(1.0)) * i / 1000.0; // increasing up to e+1
        double f = linear_sieve_f(s);
        CHECK(f >= prev_f);
        prev_f = f;
    }
    // closed forms satisfy f < F below s = e+1; sample the sieve window (1, 3]
    for (int i = 1; i <= 1000; ++i) {
        double s = 1.0 + 2.0 * i / 1000.0;
        CHECK(linear_sieve_f(s) < linear_sieve_F(s));
    }
}

TEST_CASE("two-sided bound assembly") {
    JRInput basic{1.0, 1.0, 2.0, 0.0, 0.0, 0.0};
    CHECK(jurkat_richert_upper(basic) == doctest::Approx(kEg).epsilon(1e-15));
    CHECK(jurkat_richert_lower(basic) == doctest::Approx(0.0));

    JRInput assembled{1.0, 1.0, 3.0, 1.0 / 300.0, 0.1, 2.0};
    CHECK(jurkat_richert_upper(assembled) ==
          doctest::Approx(linear_sieve_F(3.0) + std::exp(11.0) / 300.0 + 0.1 + 2.0));

    // upper dominates lower wherever both are defined
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> us(2.0, 3.0), ue(0.0, 0.004), ur(0.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        JRInput in{1.0 + ur(rng), 0.5, us(rng), ue(rng), ur(rng), ur(rng)};
        CHECK(jurkat_richert_upper(in) >= jurkat_richert_lower(in));
    }

    CHECK_THROWS_AS(jurkat_richert_upper(JRInput{1, 1, 3.5, 0, 0, 0}), ValidationError);
    CHECK_THROWS_AS(jurkat_richert_lower(JRInput{1, 1, 1.5, 0, 0, 0}), ValidationError);
    CHECK_THROWS_AS(jurkat_richert_upper(JRInput{1, 1, 2, 0.01, 0, 0}), ValidationError);
    CHECK_THROWS_AS(jurkat_richert_upper(JRInput{0, 1, 2, 0, 0, 0}), ValidationError);
}

TEST_CASE("density ratio condition") {
    arith::SieveDensity d{1};

    // no primes in [u, z): empty product
    CHECK(check_density_condition(d, 89.5, 90.0, {}, 0.0));

    // direct evaluation at u=2, z=100 (product ~ 6.28 < lg ratio 6.64)
    CHECK(check_density_condition(d, 2.0, 100.0, {}, 0.0));

    // u=3, z=10^4 fails bare but passes once the first primes are excluded
    CHECK_FALSE(check_density_condition(d, 3.0, 1e4, {}, 0.0));
    std::vector<uint64_t> q12 = {2, 3};
    CHECK(check_density_condition(d, 3.0, 1e4, q12, 0.0));

    // enlarging the excluded set never flips true -> false
    std::vector<uint64_t> q3 = {2, 3, 5};
    CHECK(check_density_condition(d, 3.0, 1e4, q3, 0.0));

    CHECK_THROWS_AS(check_density_condition(d, 1.0, 10.0, {}, 0.0), ValidationError);
}

TEST_CASE("minimal excluded-prime count is non-increasing in epsilon") {
    arith::SieveDensity d{1};
    auto table = primes::sieve_primes(100);
    auto minimal_k = [&](double eps) {
        for (uint64_t k = 0; k <= 6; ++k) {
            std::span<const uint64_t> q(table.primes.data(), k);
            if (check_density_condition(d, 3.0, 1e4, q, eps)) return k;
        }
        return (uint64_t)7;
    };
    uint64_t prev = minimal_k(0.0);
    for (double eps : {0.0005, 0.001, 0.002, 0.004}) {
        uint64_t k = minimal_k(eps);
        CHECK(k <= prev);
        prev = k;
    }
}

TEST_CASE("kernel integral: closed form vs quadrature") {
    CHECK(a2_kernel_integral() == doctest::Approx(std::log(6.0) / 4.0).epsilon(1e-15));
    auto quad = a2_kernel_integral_quad(1e-12);
    CHECK(std::fabs(quad.value - std::log(6.0) / 4.0) < 1e-10);
    CHECK(quad.error_bound < 1e-10);
    // scaled by 2 e^gamma this is the A2 headline kernel
    CHECK(2.0 * kEg * a2_kernel_integral() ==
          doctest::Approx(kEg * std::log(6.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("triple product integral: reduction, 2-D quadrature, Monte Carlo") {
    auto one_d = triple_product_integral(1e-8);
    auto two_d = triple_product_integral_2d(1e-7);
    CHECK(std::fabs(one_d.value - two_d.value) < 1e-6);
    CHECK(one_d.value > 0.35);
    CHECK(one_d.value <= 0.364);
    CHECK(one_d.error_bound <= 1e-8);

    // integrand vanishes at the right endpoint t1 = 1/3 (log 1)
    CHECK(std::log(2.0 - 3.0 / 3.0) == 0.0);

    // Monte Carlo cross-check, 10^7 points, 3 sigma
    std::mt19937_64 rng(20260810);
    std::uniform_real_distribution<double> ut1(0.125, 1.0 / 3.0), ut2(1.0 / 3.0, 7.0 / 16.0);
    const double box = (1.0 / 3.0 - 0.125) * (7.0 / 16.0 - 1.0 / 3.0);
    const size_t N = 10'000'000;
    double sum = 0, sumsq = 0;
    for (size_t i = 0; i < N; ++i) {
        double t1 = ut1(rng), t2 = ut2(rng);
        double v = 0.0;
        if (t2 > 1.0 / 3.0 && t2 < 1.0 - t1 - t2) v = 1.0 / (t1 * t2 * (1.0 - t1 - t2));
        sum += v;
        sumsq += v * v;
    }
    double mean = sum / N;
    double var = (sumsq / N - mean * mean) / N;
    double mc = mean * box;
    double sigma = std::sqrt(var) * box;
    CHECK(std::fabs(mc - one_d.value) < 3.0 * sigma);
}

TEST_CASE("mertens ratio approaches 1 from below the 5% band") {
    CHECK(std::fabs(mertens_asymptotic_ratio(1e3, 1) - 1.0) < 0.1);
    double d2 = std::fabs(mertens_asymptotic_ratio(1e2, 1) - 1.0);
    double d3 = std::fabs(mertens_asymptotic_ratio(1e3, 1) - 1.0);
    double d4 = std::fabs(mertens_asymptotic_ratio(1e4, 1) - 1.0);
    CHECK(d3 < d2);
    CHECK(d4 < d3);

    // q-conditioned variant stays close too (the q-correction is applied)
    CHECK(std::fabs(mertens_asymptotic_ratio(1e3, 15) - 1.0) < 0.1);
}

TEST_CASE("prime sums next to their integrals") {
    CHECK(catalog_function_from_name("window") == CatalogFunction::Window);
    CHECK(catalog_function_from_name("a2-kernel") == CatalogFunction::A2Kernel);
    CHECK(catalog_function_from_name("triple-region") == CatalogFunction::TripleRegion);
    CHECK_THROWS_AS(catalog_function_from_name("nope"), ValidationError);

    auto w = prime_sum_integral_check(CatalogFunction::Window, 1e3);
    CHECK(w.integral == doctest::Approx(std::log(8.0 / 3.0)).epsilon(1e-12));
    CHECK(w.prime_sum == doctest::Approx(1.0 / 3 + 1.0 / 5 + 1.0 / 7).epsilon(1e-12));

    auto k = prime_sum_integral_check(CatalogFunction::A2Kernel, 1e4);
    CHECK(k.integral == doctest::Approx(kEg * std::log(6.0) / 2.0).epsilon(1e-12));
    CHECK(k.prime_sum > 0);

    auto t = prime_sum_integral_check(CatalogFunction::TripleRegion, 1e4);
    CHECK(t.integral == doctest::Approx(0.363083729248).epsilon(1e-6));
    CHECK(t.prime_sum > 0);

    // the smooth kernel converges monotonically at desk scale
    double prev = 1e9;
    for (double x : {1e3, 1e4, 1e6}) {
        auto r = prime_sum_integral_check(CatalogFunction::A2Kernel, x);
        double diff = std::fabs(r.prime_sum - r.integral);
        CHECK(diff < prev);
        prev = diff;
    }
}

TEST_CASE("headline constants") {
    auto b = headline_constants(1e-6);
    CHECK(b.c_A1 == doctest::Approx(4.0 * std::log(3.0)).epsilon(1e-15));
    CHECK(b.c_A2 == doctest::Approx(4.0 * std::log(6.0)).epsilon(1e-15));
    CHECK(std::round(b.c_A1 * 1000) / 1000 == doctest::Approx(4.394));
    CHECK(b.I_A2 == doctest::Approx(std::log(6.0) / 4.0).epsilon(1e-15));
    CHECK(b.I_A3 == doctest::Approx(0.363083729248).epsilon(1e-7));
    CHECK(b.c_A3 == doctest::Approx(4.0 * b.I_A3).epsilon(1e-15));
    CHECK(b.net == doctest::Approx(b.c_A1 - b.c_A2 / 2 - b.c_A3 / 2).epsilon(1e-15));
    CHECK(b.net > 0.08);
    CHECK(std::fabs(b.pi2 - 0.66) < 0.01);
    CHECK(b.gamma == doctest::Approx(0.5772156649).epsilon(1e-9));
}
