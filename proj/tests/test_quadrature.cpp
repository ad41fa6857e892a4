#include <doctest.h>

#include <cmath>
#include <numeric>

#include "msm/quadrature.hpp"
#include "support.hpp"

using namespace msm;

namespace {

double beta_fn(double a, double b) { return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b)); }

double apply(const QuadratureRule& r, auto f)
{
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        s += r.weights[i] * f(r.nodes[i]);
    return s;
}

} // namespace

TEST_SUITE("quadrature")
{
TEST_CASE("Gauss-Legendre special case")
{
    const QuadratureRule r = gauss_jacobi(5, 0.0, 0.0);
    CHECK(apply(r, [](double s) { return 1.0; }) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(apply(r, [](double s) { return std::pow(s, 8); }) == doctest::Approx(2.0 / 9.0).epsilon(1e-13));
    CHECK(r.nodes.size() == 5);
}

TEST_CASE("small rules")
{
    const QuadratureRule one = gauss_jacobi(1, 0.5, -0.3);
    CHECK(one.nodes.size() == 1);
    CHECK(apply(one, [](double) { return 1.0; }) ==
          doctest::Approx(std::pow(2.0, 1.2) * beta_fn(1.5, 0.7)).epsilon(1e-13));
}

TEST_CASE("property: Gauss-Jacobi reproduces Beta moments on an interval")
{
    testing::Draw draw(301);
    for (int i = 0; i < 40; ++i) {
        const double a = draw.uniform(-0.95, 3.0);
        const double b = draw.uniform(-0.95, 3.0);
        const int n = draw.integer(2, 60);
        const QuadratureRule r = gauss_jacobi_interval(n, a, b, 0.0, 1.0);
        const int k = draw.integer(0, 2 * n - 1);
        // int_0^1 (1-u)^a u^b u^k du = B(b+k+1, a+1)
        const double got = apply(r, [k](double u) { return std::pow(u, k); });
        REQUIRE(got == doctest::Approx(beta_fn(b + k + 1.0, a + 1.0)).epsilon(1e-11));
        for (double w : r.weights)
            REQUIRE(w > 0.0);
        REQUIRE(std::is_sorted(r.nodes.begin(), r.nodes.end()));
    }
}

TEST_CASE("Clenshaw-Curtis integrates polynomials up to degree n")
{
    const QuadratureRule r = clenshaw_curtis(16);
    CHECK(r.nodes.size() == 17);
    for (int k = 0; k <= 16; ++k) {
        const double exact = k % 2 ? 0.0 : 2.0 / (k + 1.0);
        CHECK(apply(r, [k](double s) { return std::pow(s, k); }) == doctest::Approx(exact).epsilon(1e-13));
    }
    CHECK(apply(clenshaw_curtis(64), [](double s) { return std::exp(s); }) ==
          doctest::Approx(std::exp(1.0) - std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("rejects bad arguments")
{
    CHECK_THROWS(gauss_jacobi(0, 0.0, 0.0));
    CHECK_THROWS(gauss_jacobi(4, -1.0, 0.0));
    CHECK_THROWS(clenshaw_curtis(0));
}
}
