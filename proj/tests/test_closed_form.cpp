#include "relgw/closed_form.hpp"

#include "relgw/verify.hpp"
#include "relgw/wdvv.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace relgw;

TEST_CASE("closed-form anchors, line")
{
    // d=1, single composition (1): 2!/3 * 3/1! * 1/2! = 1
    CHECK(closed_line(1) == 1);
    // d=2, compositions (2) and (1,1): 24/5 * (25/8 - 5/3) = 7
    CHECK(closed_line(2) == 7);
    CHECK_THROWS_AS(closed_line(0), std::invalid_argument);
}

TEST_CASE("closed-form anchors, conic")
{
    // d=1, single composition: 1!/2 * 2^2 * 2 = 4
    CHECK(closed_conic(1) == 4);
    // d=2: 2/3 * (72 - 24) = 32
    CHECK(closed_conic(2) == 32);
    CHECK_THROWS_AS(closed_conic(0), std::invalid_argument);
}

TEST_CASE("recursion agrees with the closed forms")
{
    InvariantTable line(builtin_line());
    InvariantTable conic(builtin_conic());
    for (long d = 1; d <= 10; ++d) {
        CHECK(line.nbar(d + 1) == closed_line(d));
        CHECK(conic.nbar(d + 2) == closed_conic(d));
    }
}

TEST_CASE("closed_fast agrees with the composition enumeration")
{
    const auto line = closed_fast(PairKind::line, 12);
    const auto conic = closed_fast(PairKind::conic, 12);
    for (long d = 1; d <= 12; ++d) {
        CHECK(line.at(d + 1) == closed_line(d));
        CHECK(conic.at(d + 2) == closed_conic(d));
    }
    CHECK(closed_fast(PairKind::line, 2) ==
          std::map<long, Rational>{{2, 1}, {3, 7}});
    CHECK(closed_fast(PairKind::conic, 2) ==
          std::map<long, Rational>{{3, 4}, {4, 32}});
}

TEST_CASE("enumeration is capped")
{
    CHECK_THROWS_AS(closed_line(kCompositionEnumerationCap + 1), std::invalid_argument);
}

TEST_CASE("closed-form outputs are positive integers in the tested range")
{
    // empirical property, not claimed in general
    for (const PairKind kind : {PairKind::line, PairKind::conic}) {
        for (const auto& [d, v] : closed_fast(kind, 14)) {
            CHECK(denominator(v) == 1);
            CHECK(v > 0);
        }
    }
}

TEST_CASE("functional equation passes for both pairs")
{
    for (const PairKind kind : {PairKind::line, PairKind::conic}) {
        const VerificationReport r = check_functional_eq(kind, 20);
        INFO(r.identity);
        CHECK(r.pass);
        CHECK_FALSE(r.first_discrepancy.has_value());
    }
    CHECK_THROWS_AS(check_functional_eq(PairKind::line, 2), std::invalid_argument);
}

TEST_CASE("functional equation detects a corrupted invariant")
{
    // build F with nbar_3 deliberately set to 8 (true value: 7)
    InvariantTable tab(builtin_line());
    TruncatedSeries f = generating_series(PairKind::line, tab, 20);
    f[6] = Rational(8) / factorial(5);
    const VerificationReport r = check_functional_eq_series(PairKind::line, f);
    CHECK_FALSE(r.pass);
    REQUIRE(r.first_discrepancy.has_value());
    // A picks up the defect at q^5 with weight (6-1)/5! = 1/24
    CHECK(r.first_discrepancy->index == 5);
    CHECK(r.first_discrepancy->expected == 0);
}

TEST_CASE("m-constant identity")
{
    InvariantTable line(builtin_line());
    InvariantTable conic(builtin_conic());
    CHECK(check_m_constant(PairKind::line, line, 20).pass);
    CHECK(check_m_constant(PairKind::conic, conic, 20).pass);
}

TEST_CASE("verification reports serialize their discrepancy")
{
    const auto ok = VerificationReport::ok("x", 5);
    CHECK(ok.pass);
    CHECK_FALSE(ok.first_discrepancy.has_value());
    const auto bad = VerificationReport::fail("x", 5, 3, Rational(1), Rational(2));
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.first_discrepancy.has_value());
    CHECK(bad.first_discrepancy->index == 3);
}

TEST_CASE("verify_builtin runs green end to end")
{
    VerifyOptions opt;
    opt.d_max = 8;
    opt.order = 12;
    opt.enumeration_d_max = 8;
    for (const PairKind kind : {PairKind::line, PairKind::conic}) {
        for (const auto& r : verify_builtin(kind, opt)) {
            INFO(r.identity);
            CHECK(r.pass);
        }
    }
    for (const auto& r : verify_pair(builtin_line(), opt)) {
        INFO(r.identity);
        CHECK(r.pass);
    }
    for (const auto& r : verify_kernels(12)) {
        INFO(r.identity);
        CHECK(r.pass);
    }
}

TEST_CASE("verify_against_table flags a corrupted entry")
{
    InvariantTable tab = table(builtin_line(), 6);
    auto entries = tab.values();
    CHECK(verify_against_table(builtin_line(), entries).pass);
    entries[4] += 1;
    const VerificationReport r = verify_against_table(builtin_line(), entries);
    CHECK_FALSE(r.pass);
    CHECK(r.identity == "recursion-vs-closed-form");
    REQUIRE(r.first_discrepancy.has_value());
    CHECK(r.first_discrepancy->index == 4);
}
