#include <doctest.h>

#include <cmath>
#include <numbers>

#include "msm/errors.hpp"
#include "msm/gamma.hpp"
#include "support.hpp"

using namespace msm;
using testing::rel_err;

TEST_SUITE("gamma")
{
TEST_CASE("log_gamma at simple points")
{
    CHECK(std::abs(log_gamma(1.0)) < 1e-15);
    CHECK(std::abs(log_gamma(0.5) - std::log(std::sqrt(std::numbers::pi))) < 1e-15);
    CHECK(std::abs(log_gamma(4.0) - std::log(6.0)) < 1e-14);
}

TEST_CASE("log_gamma(2+3i) against a 40-digit reference")
{
    const Complex ref(-2.0928517530927333496, 2.3023965434668676262);
    CHECK(rel_err(log_gamma({2.0, 3.0}), ref) < 1e-13);
}

TEST_CASE("log_gamma rejects poles")
{
    CHECK_THROWS_AS(log_gamma(0.0), PoleError);
    CHECK_THROWS_AS(log_gamma(-3.0), PoleError);
    CHECK_THROWS_AS(log_gamma(Complex(-2.0, 1e-13)), PoleError);
    CHECK_NOTHROW(log_gamma(Complex(-2.0, 1e-9)));
}

TEST_CASE("reciprocal_gamma")
{
    CHECK(reciprocal_gamma(0.0) == Complex(0.0));
    CHECK(reciprocal_gamma(-4.0) == Complex(0.0));
    CHECK(std::abs(reciprocal_gamma(1.0) - 1.0) < 1e-15);
    CHECK(std::abs(reciprocal_gamma(3.0) - 0.5) < 1e-15);
}

TEST_CASE("gamma on the negative axis matches reflection")
{
    // Gamma(-1/2) = -2 sqrt(pi)
    CHECK(rel_err(msm::gamma(-0.5), -2.0 * std::sqrt(std::numbers::pi)) < 1e-14);
    CHECK(rel_err(msm::gamma(-2.5), -8.0 * std::sqrt(std::numbers::pi) / 15.0) < 1e-14);
}

TEST_CASE("pochhammer")
{
    CHECK(pochhammer({0.3, 2.0}, 0) == Complex(1.0));
    CHECK(pochhammer(1.0, 5) == Complex(120.0));
    CHECK(pochhammer(0.0, 3) == Complex(0.0));
    CHECK(pochhammer(-2.0, 5) == Complex(0.0));
    CHECK(rel_err(pochhammer(0.5, 150), std::exp(log_gamma(150.5) - log_gamma(0.5))) < 1e-12);
}

TEST_CASE("duplication checks at fixed points")
{
    CHECK(pochhammer_duplication_check(1.0, 2) <= 1e-13);
    CHECK(pochhammer_duplication_check(2.5, 3) <= 1e-12);
    CHECK(pochhammer_duplication_check({1.0, 1.0}, 4) <= 1e-12);
    CHECK(legendre_duplication_check(1.0) <= 1e-14);
    CHECK(legendre_duplication_check(3.7) <= 1e-13);
    CHECK(legendre_duplication_check({0.5, 2.0}) <= 1e-12);
}

TEST_CASE("gamma_ratio")
{
    CHECK(std::abs(gamma_ratio({{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}}) - 1.0) < 1e-15);
    CHECK(std::abs(gamma_ratio({{2.0, 2.0, 2.0}, {1.0, 1.0, 1.0}}) - 1.0) < 1e-14);
    CHECK(std::abs(gamma_ratio({{3.0, 1.0, 1.0}, {2.0, 1.0, 1.0}}) - 2.0) < 1e-14);
    CHECK(std::abs(gamma_ratio({{1.0, 2.0, 1.0}, {1.0, 2.0, 2.0}}) - 1.0) < 1e-15);
    CHECK(gamma_ratio({{1.5, 1.0, 1.0}, {-2.0, 1.0, 1.0}}) == Complex(0.0));
    CHECK_THROWS_AS(gamma_ratio({{-1.0, 1.0, 1.0}, {2.0, 1.0, 1.0}}), PoleError);
}

TEST_CASE("overflow carries the log magnitude")
{
    try {
        gamma_ratio({{200.0, 200.0, 1.0}, {1.0, 1.0, 1.0}});
        FAIL("expected OverflowError");
    } catch (const OverflowError& e) {
        CHECK(std::abs(e.log_magnitude() - 2.0 * std::lgamma(200.0)) < 1e-9);
    }
}

TEST_CASE("property: recurrence Gamma(z+1) = z Gamma(z)")
{
    testing::Draw draw(101);
    for (int i = 0; i < 1000; ++i) {
        Complex z = draw.complex(-20.0, 20.0, 20.0);
        if (std::abs(z) > 20.0 || std::abs(z.imag()) < 1e-3 && z.real() < 0.5)
            continue;
        const Complex lhs = std::exp(log_gamma(z + 1.0) - log_gamma(z));
        REQUIRE(rel_err(lhs, z) < 1e-12);
    }
}

TEST_CASE("property: reciprocal_gamma times gamma is one")
{
    testing::Draw draw(102);
    for (int i = 0; i < 500; ++i) {
        const Complex z = draw.complex(-8.0, 8.0, 5.0);
        if (near_integer(z) || std::abs(z.imag()) < 1e-3)
            continue;
        REQUIRE(std::abs(reciprocal_gamma(z) * std::exp(log_gamma(z)) - 1.0) < 1e-12);
    }
}

TEST_CASE("property: pochhammer splits over m+n")
{
    testing::Draw draw(103);
    for (int i = 0; i < 300; ++i) {
        const Complex z = draw.complex(-5.0, 5.0, 3.0);
        const unsigned m = static_cast<unsigned>(draw.integer(0, 15));
        const unsigned n = static_cast<unsigned>(draw.integer(0, 15));
        const Complex whole = pochhammer(z, m + n);
        const Complex split = pochhammer(z, m) * pochhammer(z + double(m), n);
        REQUIRE(std::abs(whole - split) <= 1e-12 * std::max(1.0, std::abs(whole)));
    }
}

TEST_CASE("property: duplication identities on a randomized grid")
{
    testing::Draw draw(104);
    for (int i = 0; i < 500; ++i) {
        const Complex z = draw.complex(-10.0, 10.0, 10.0);
        if (std::abs(z) > 10.0 || near_integer(2.0 * z) || at_pole(z + 0.5))
            continue;
        REQUIRE(legendre_duplication_check(z) <= 1e-11);
        REQUIRE(pochhammer_duplication_check(z, static_cast<unsigned>(draw.integer(0, 20))) <= 1e-11);
    }
}
}
