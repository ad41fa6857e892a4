#include <doctest.h>

#include <cmath>

#include "msm/errors.hpp"
#include "msm/images.hpp"
#include "support.hpp"

using namespace msm;
using testing::rel_err;

namespace {

constexpr double kTol = 1e-15;

ImageRequest request(MsmParams m, Complex rho, BesselParams w, double x, Side side,
                     Representation rep = Representation::wright)
{
    ImageRequest r;
    r.params = m;
    r.rho = rho;
    r.bessel = w;
    r.x = x;
    r.side = side;
    r.representation = rep;
    return r;
}

// Draws admissible requests with complex parameters.
ImageRequest random_request(testing::Draw& draw, Side side, double im)
{
    for (;;) {
        const MsmParams m{draw.complex(-0.5, 1.5, im), draw.complex(-0.5, 1.5, im), draw.complex(-0.5, 1.5, im),
                          draw.complex(-0.5, 1.5, im), draw.complex(0.3, 2.5, im)};
        const BesselParams w(draw.complex(-0.4, 1.5, im), draw.complex(0.5, 2.5, im), draw.complex(-2, 2, im));
        const Complex rho = side == Side::left ? draw.complex(0.0, 3.0, im) : draw.complex(-4.0, 0.5, im);
        const ImageRequest r = request(m, rho, w, draw.uniform(0.3, 2.5), side);
        if (admissible(r))
            return r;
    }
}

} // namespace

TEST_SUITE("images")
{
TEST_CASE("left Wright image of J0 against a 40-digit reference")
{
    const ImageRequest r = request({0, 0, 0, 0, 1}, 1.0, {0.0, 1.0, 1.0}, 1.0, Side::left);
    const double ref = 0.91973041008976023931; // int_0^1 J0(t) dt
    CHECK(rel_err(image_wright_left(r, kTol).value, ref) < 1e-14);
    CHECK(rel_err(image_6f7_left(r, kTol).value, ref) < 1e-14);
    CHECK(rel_err(termwise_oracle(r, 30).value, ref) < 1e-14);
}

TEST_CASE("right Wright image against a 40-digit reference")
{
    const ImageRequest r = request({2, 2, 0, 1, 1}, -1.0, {0.0, 1.0, 1.0}, 1.0, Side::right);
    const double ref = 0.16598288550057471745;
    CHECK(rel_err(image_wright_right(r, kTol).value, ref) < 1e-14);
    CHECK(rel_err(image_6f7_right(r, kTol).value, ref) < 1e-14);
    CHECK(rel_err(termwise_oracle(r, 30).value, ref) < 1e-14);
}

TEST_CASE("termwise oracle edge cases")
{
    const MsmParams m{0.3, 0.1, 0.2, 0.5, 1.4};
    const ImageRequest r = request(m, 1.2, {0.4, 1.5, 0.8}, 1.3, Side::left);
    const Complex one_term = termwise_oracle(r, 0).value;
    const Complex expected = std::pow(0.5, 0.4) * reciprocal_gamma(r.bessel.kappa()) * power_image_left(m, 1.6, 1.3);
    CHECK(rel_err(one_term, expected) < 1e-14);

    ImageRequest zero_c = r;
    zero_c.bessel = BesselParams(0.4, 1.5, 0.0);
    CHECK(rel_err(termwise_oracle(zero_c, 12).value, termwise_oracle(zero_c, 0).value) < 1e-15);
    CHECK(rel_err(image_6f7_left(zero_c, kTol).value, termwise_oracle(zero_c, 0).value) < 1e-14);
}

TEST_CASE("small x drives the left image to zero")
{
    const ImageRequest base = request({0.3, 0.1, 0.2, 0.5, 1.4}, 1.2, {0.4, 1.5, 0.8}, 1.0, Side::left);
    double previous = std::abs(image_wright_left(base, kTol).value);
    for (double x : {1e-2, 1e-4, 1e-6}) {
        ImageRequest r = base;
        r.x = x;
        const double v = std::abs(image_wright_left(r, kTol).value);
        CHECK(v < previous);
        previous = v;
    }
    CHECK(previous < 1e-8);
}

TEST_CASE("right image scales with x at fixed series argument")
{
    const MsmParams m{2, 2, 0, 1, 1};
    const ImageRequest a = request(m, -1.0, {0.3, 1.0, 1.0}, 1.0, Side::right);
    ImageRequest b = a;
    b.x = 2.0;
    b.bessel = BesselParams(0.3, 1.0, 4.0); // c / (4x^2) unchanged
    const Complex ratio = image_6f7_right(b, kTol).value / image_6f7_right(a, kTol).value;
    CHECK(rel_err(ratio, std::pow(2.0, -1.0 - 0.3 - 4.0 + 1.0 - 1.0)) < 1e-13);
}

TEST_CASE("admissibility")
{
    ImageRequest r = request({0, 0, 0, 0, 1}, 1.0, {0.0, 1.0, 1.0}, 1.0, Side::left);
    CHECK(admissible(r));
    r.params.gamma = 0.0;
    CHECK_THROWS_AS(image_wright_left(r, kTol), DomainError);
    r.params.gamma = 1.0;
    r.bessel = BesselParams(-1.0, 1.0, 1.0); // kappa = 0
    CHECK_FALSE(admissible(r));
    r.bessel = BesselParams(-1.5, 3.0, 1.0); // kappa = 1/2, rho + p < 0
    CHECK(inadmissibility_reason(r).value().find("rho+p") != std::string::npos);
}

TEST_CASE("Wright specs keep convergence index one")
{
    testing::Draw draw(501);
    for (int i = 0; i < 50; ++i) {
        CHECK(left_wright_spec(random_request(draw, Side::left, 1.0)).convergence_index() == 1.0);
        CHECK(right_wright_spec(random_request(draw, Side::right, 1.0)).convergence_index() == 1.0);
    }
}

TEST_CASE("trig images reproduce elementary integrals")
{
    auto eval = [](TrigKind kind, double c, double x, Representation rep) {
        TrigImageRequest r;
        r.params = {0, 0, 0, 0, 1};
        r.rho = 1.0;
        r.c = c;
        r.x = x;
        r.kind = kind;
        r.representation = rep;
        return trig_image(r, kTol).value;
    };
    for (auto rep : {Representation::wright, Representation::hyp6f7}) {
        CHECK(rel_err(eval(TrigKind::cos, 1, 1, rep), std::sin(1.0)) < 1e-10);
        CHECK(rel_err(eval(TrigKind::cosh, 1, 1, rep), std::sinh(1.0)) < 1e-10);
        CHECK(rel_err(eval(TrigKind::sin, 1, 1, rep), 1.0 - std::cos(1.0)) < 1e-10);
        CHECK(rel_err(eval(TrigKind::sinh, 0.5, 2, rep), (std::cosh(1.0) - 1.0) / 0.5) < 1e-10);
    }
}

TEST_CASE("trig images do not depend on the internal b")
{
    TrigImageRequest r;
    r.params = {0.4, 0.2, 0.1, 0.6, 1.3};
    r.rho = 1.7;
    r.c = 0.8;
    r.x = 1.2;
    for (TrigKind kind : {TrigKind::cos, TrigKind::cosh, TrigKind::sin, TrigKind::sinh}) {
        r.kind = kind;
        const Complex base = trig_image(r, kTol, kDefaultMaxTerms, 1.0).value;
        CHECK(rel_err(trig_image(r, kTol, kDefaultMaxTerms, 2.0).value, base) < 1e-11);
        CHECK(rel_err(trig_image(r, kTol, kDefaultMaxTerms, 4.0).value, base) < 1e-11);
    }
}

TEST_CASE("property: Wright image equals term-wise oracle (complex parameters)")
{
    testing::Draw draw(502);
    for (Side side : {Side::left, Side::right}) {
        for (int i = 0; i < 60; ++i) {
            const ImageRequest r = random_request(draw, side, 1.0);
            const SeriesResult w = image(r, kTol);
            const SeriesResult t = termwise_adaptive(r, kTol);
            REQUIRE(w.converged);
            REQUIRE(rel_err(w.value, t.value) < 1e-10);
        }
    }
}

TEST_CASE("property: 6F7 image equals Wright image")
{
    testing::Draw draw(503);
    for (Side side : {Side::left, Side::right}) {
        for (int i = 0; i < 30; ++i) {
            ImageRequest r = random_request(draw, side, 0.5);
            const Complex w = image(r, kTol).value;
            r.representation = Representation::hyp6f7;
            REQUIRE(rel_err(image(r, kTol).value, w) < 1e-10);
        }
    }
}

TEST_CASE("property: trig representations agree on both sides")
{
    testing::Draw draw(504);
    int checked = 0;
    while (checked < 40) {
        TrigImageRequest r;
        r.params = {draw.uniform(-0.5, 1.5), draw.uniform(-0.5, 1.5), draw.uniform(-0.5, 1.5),
                    draw.uniform(-0.5, 1.5), draw.uniform(0.3, 2.5)};
        r.side = draw.integer(0, 1) ? Side::left : Side::right;
        r.rho = r.side == Side::left ? draw.uniform(0.5, 3.0) : draw.uniform(-4.0, 0.0);
        r.c = draw.uniform(0.1, 2.0);
        r.x = draw.uniform(0.3, 2.0);
        r.kind = static_cast<TrigKind>(draw.integer(0, 3));
        if (inadmissibility_reason(r))
            continue;
        ++checked;
        const Complex w = trig_image(r, kTol).value;
        r.representation = Representation::hyp6f7;
        REQUIRE(rel_err(trig_image(r, kTol).value, w) < 1e-10);
    }
}

TEST_CASE("prefactor overflow is reported with its log magnitude")
{
    ImageRequest big = request({0, 0, 0, 0, 1}, 4.0, {0.0, 1.0, 0.0}, 1e300, Side::left);
    CHECK_THROWS_AS(image_wright_left(big, kTol), OverflowError);
}
}
