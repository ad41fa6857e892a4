#include <doctest.h>

#include <sstream>

#include "msm/errors.hpp"
#include "msm/grid.hpp"
#include "msm/printed_forms.hpp"
#include "msm/verify.hpp"

using namespace msm;

namespace {

GridSpec parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_grid(in);
}

} // namespace

TEST_SUITE("grid")
{
TEST_CASE("single fixed point")
{
    const auto cases = expand_grid(parse("fixed.rho = 1.5\nfixed.gamma = 2,0.5\n"), 1);
    REQUIRE(cases.size() == 1);
    CHECK(cases[0].point.rho == Complex(1.5));
    CHECK(cases[0].point.params.gamma == Complex(2.0, 0.5));
}

TEST_CASE("two axes expand lexicographically")
{
    const auto cases = expand_grid(parse("rho.start = 1\nrho.stop = 2\nrho.count = 3\n"
                                         "x.start = 0.5\nx.stop = 1.5\nx.count = 3\n"),
                                   1);
    REQUIRE(cases.size() == 9);
    CHECK(cases[0].point.rho == Complex(1.0));
    CHECK(cases[0].point.x == 0.5);
    CHECK(cases[1].point.x == 1.0);
    CHECK(cases[3].point.rho == Complex(1.5));
    CHECK(cases[8].point.x == 1.5);
    for (int i = 0; i < 9; ++i)
        CHECK(cases[i].index == i);
}

TEST_CASE("random draws are reproducible")
{
    const GridSpec g = parse("rho.start = 1\nrho.stop = 2\nrho.count = 1\nrandom.count = 5\n");
    const auto a = expand_grid(g, 7), b = expand_grid(g, 7), c = expand_grid(g, 8);
    REQUIRE(a.size() == 6);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i].point.rho == b[i].point.rho);
    CHECK(a[3].point.rho != c[3].point.rho);
}

TEST_CASE("malformed grids")
{
    CHECK_THROWS_AS(parse("rho.start = 1\nrho.count = 0\n"), ParseError);
    CHECK_THROWS_AS(parse("rho.start = 1\nrho.count = 3\n"), ParseError);
    CHECK_THROWS_AS(parse("delta.start = 1\n"), ParseError);
    CHECK_THROWS_AS(parse("rho.start = abc\n"), ParseError);
    CHECK_THROWS_AS(parse("just words\n"), ParseError);
    CHECK_THROWS_AS(parse("sides = up\n"), ParseError);
    CHECK_THROWS_AS(parse_grid_file("/nonexistent/grid.txt"), ParseError);
}

TEST_CASE("admissibility flags")
{
    const auto cases = expand_grid(parse("fixed.rho = -1\nfixed.alpha = 2\nfixed.alpha_p = 2\nfixed.beta_p = 1\n"), 1);
    CHECK_FALSE(cases[0].admissible_left);
    CHECK(cases[0].admissible_right);
}

TEST_CASE("only inadmissible points give an empty report with a warning")
{
    const GridSpec g = parse("fixed.rho = -3\nfixed.gamma = 1\nsides = left\n");
    const VerifyOutcome out = run_verification(g, {});
    CHECK(out.cases == 0);
    CHECK(out.failures == 0);
    CHECK(out.report["summary"]["warnings"].size() == 1);
}

TEST_CASE("small verification run passes and is deterministic")
{
    const GridSpec g = parse("rho.start = 1.2\nrho.stop = 2.2\nrho.count = 2\n"
                             "fixed.alpha = 0.35\nfixed.beta = 0.1\nfixed.beta_p = 0.4\nfixed.gamma = 1.3\n"
                             "fixed.c = 0.9\nsides = left\ntrig.check = true\n");
    VerifyConfig one, many;
    one.threads = 1;
    many.threads = 4;
    const VerifyOutcome a = run_verification(g, one);
    const VerifyOutcome b = run_verification(g, many);
    CHECK(a.cases == 2);
    CHECK(a.failures == 0);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.csv == b.csv);
}

TEST_CASE("printed-form audit flags the repaired typos")
{
    ParameterPoint pt;
    pt.params = {0.35, 0.2, 0.15, 0.45, 1.3};
    pt.rho = 1.4;
    pt.p = 0.3;
    pt.c = 0.9;
    const AuditResult left = audit_printed_forms(pt);
    auto flagged = [](const AuditResult& r, const std::string& name) {
        for (const auto& e : r.entries)
            if (e.form == name)
                return true;
        return false;
    };
    CHECK(flagged(left, "bessel_left_6f7"));
    CHECK(flagged(left, "trig_left_wright_sin"));
    CHECK_FALSE(flagged(left, "trig_left_wright_cos"));
    CHECK_FALSE(flagged(left, "trig_left_wright_cosh"));

    pt.rho = -2.2;
    const AuditResult right = audit_printed_forms(pt);
    CHECK(flagged(right, "bessel_right_wright"));
    CHECK(flagged(right, "power_image_right"));
}
}
