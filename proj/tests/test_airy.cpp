#include "ncgqw/airy.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

using namespace ncgqw;

TEST_CASE("values at the origin match the gamma closed forms") {
    CHECK_THAT(ai(0.0), Catch::Matchers::WithinRel(oracle::ai_origin_closed_form(), 1e-14));
    CHECK_THAT(ai_prime(0.0),
               Catch::Matchers::WithinRel(oracle::aip_origin_closed_form(), 1e-14));
}

TEST_CASE("agreement with the integral-representation oracle") {
    for (double z : {-8.0, -5.0, -2.0, -0.5, 0.0, 1.0, 2.5, 5.0, 7.0}) {
        const double reference = oracle::ai_integral(z);
        INFO("z = " << z);
        CHECK(std::abs(ai(z) - reference) <=
              1e-13 + 1e-11 * std::max(std::abs(reference), 1.0));
    }
    // the quoted decay spot on the positive axis
    CHECK_THAT(ai(5.0), Catch::Matchers::WithinRel(1.0834442813607441e-4, 1e-10));
    CHECK(std::abs(ai(-2.3381074105)) < 1e-10);
}

TEST_CASE("monotone decay on the positive axis") {
    double prev = ai(1.0);
    CHECK(prev > 0.0);
    for (double z = 1.5; z <= 12.0; z += 0.5) {
        const double v = ai(z);
        CHECK(v > 0.0);
        CHECK(v < prev);
        prev = v;
    }
    CHECK(ai_prime(20.0) < 0.0);
    CHECK(std::abs(ai_prime(20.0)) < 1e-20);
    CHECK(ai(150.0) == 0.0);  // underflow region decays to exact zero
}

TEST_CASE("series and asymptotic branches agree at the handoff radius") {
    const double zs = airy_detail::kSeriesRadius;
    {
        auto series = airy_detail::maclaurin(zs);
        auto asymptotic = airy_detail::asymptotic_positive(zs);
        CHECK_THAT(asymptotic.first, Catch::Matchers::WithinRel(series.first, 1e-9));
        CHECK_THAT(asymptotic.second, Catch::Matchers::WithinRel(series.second, 1e-9));
    }
    {
        auto series = airy_detail::maclaurin(-zs);
        auto asymptotic = airy_detail::asymptotic_negative(zs);
        CHECK_THAT(asymptotic.first, Catch::Matchers::WithinRel(series.first, 1e-9));
        CHECK_THAT(asymptotic.second, Catch::Matchers::WithinRel(series.second, 1e-9));
    }
}

TEST_CASE("the Airy equation holds on a grid") {
    // five-point second derivative; h balances truncation against the
    // function's own accuracy floor
    const double h = 5e-3;
    for (double z = -10.0; z <= 5.0 + 1e-9; z += 0.25) {
        const double d2 = (-ai(z + 2 * h) + 16 * ai(z + h) - 30 * ai(z) + 16 * ai(z - h) -
                           ai(z - 2 * h)) /
                          (12 * h * h);
        INFO("z = " << z);
        CHECK(std::abs(d2 - z * ai(z)) < 1e-8);
    }
}

TEST_CASE("zeros match the bisection oracle") {
    // brackets around the first zeros, bisected on the same evaluator but with
    // no Newton step involved
    const double r1 = oracle::bisect([](double z) { return ai(z); }, -3.0, -2.0);
    const double r2 = oracle::bisect([](double z) { return ai(z); }, -4.5, -3.5);
    const double r5 = oracle::bisect([](double z) { return ai(z); }, -8.1, -7.8);

    CHECK(std::abs(airy_zero(1).r - r1) < 1e-10);
    CHECK(std::abs(airy_zero(2).r - r2) < 1e-10);
    CHECK(std::abs(airy_zero(5).r - r5) < 1e-10);

    // frozen oracle outputs
    CHECK_THAT(airy_zero(1).r, Catch::Matchers::WithinAbs(-2.338107410459767, 1e-10));
    CHECK_THAT(airy_zero(2).r, Catch::Matchers::WithinAbs(-4.0879494441309706, 1e-10));
    CHECK_THAT(airy_zero(5).r, Catch::Matchers::WithinAbs(-7.9441335871208531, 1e-10));
}

TEST_CASE("zero invariants: residual, ordering, seed bracket") {
    double prev = 0.0;
    for (int n = 1; n <= 10; ++n) {
        const AiryZero z = airy_zero(n);
        CHECK(z.residual <= 1e-12);
        CHECK(z.r < prev);
        prev = z.r;
        const double seed = -std::pow(3.0 * std::numbers::pi * (4.0 * n - 1.0) / 8.0, 2.0 / 3.0);
        CHECK(std::abs(z.r - seed) <= 0.2);
    }
    CHECK_THROWS_AS(airy_zero(0), std::domain_error);
    CHECK_THROWS_AS(airy_zero(-3), std::domain_error);
}

TEST_CASE("zeros of the derivative interlace zeros of the function") {
    // derivative zeros by Newton with Ai'' = z Ai
    auto prime_zero = [](int n) {
        double z = -std::pow(3.0 * std::numbers::pi * (4.0 * n - 3.0) / 8.0, 2.0 / 3.0);
        for (int it = 0; it < 80; ++it) {
            const double f = ai_prime(z);
            const double df = z * ai(z);
            if (df == 0.0 || std::abs(f) < 1e-13) break;
            z -= f / df;
        }
        return z;
    };
    std::vector<double> a, ap;
    for (int n = 1; n <= 10; ++n) {
        a.push_back(airy_zero(n).r);
        ap.push_back(prime_zero(n));
    }
    for (int n = 0; n < 10; ++n) {
        CHECK(ap[n] > a[n]);  // a'_n sits to the right of a_n
        if (n > 0) CHECK(a[n - 1] > ap[n]);  // and to the left of a_{n-1}
    }
}

TEST_CASE("normalization identity: quadrature equals the derivative square") {
    for (int n = 1; n <= 10; ++n) {
        const AiryZero z = airy_zero(n);
        const double by_quadrature = ai_squared_integral(z.r);
        const double d = ai_prime(z.r);
        INFO("n = " << n);
        CHECK(std::abs(by_quadrature - d * d) < 1e-8);
    }
    // the n = 1 value itself
    CHECK_THAT(ai_squared_integral(airy_zero(1).r),
               Catch::Matchers::WithinRel(0.49169661790062885, 1e-9));
    // Ai' at the first zero
    CHECK_THAT(ai_prime(airy_zero(1).r),
               Catch::Matchers::WithinRel(0.7012108227206906, 1e-9));
}

TEST_CASE("large-n integral approaches sqrt(|r_n|)/pi") {
    const AiryZero z = airy_zero(20);
    const double integral = ai_squared_integral(z.r);
    const double asymptotic = std::sqrt(-z.r) / std::numbers::pi;
    CHECK_THAT(integral, Catch::Matchers::WithinRel(asymptotic, 0.02));
}

TEST_CASE("normalization amplitude and its scaling in g") {
    Constants c;
    const double a1 = normalization(1, c);
    CHECK_THAT(a1, Catch::Matchers::WithinRel(587.905478256383, 1e-9));

    Constants doubled = c;
    doubled.g_accel *= 2.0;
    // the integral is g-independent; alpha scales as g^{1/6}
    CHECK_THAT(normalization(1, doubled) / a1,
               Catch::Matchers::WithinRel(std::pow(2.0, 1.0 / 6.0), 1e-12));
    CHECK_THROWS_AS(normalization(0, c), std::domain_error);
}
