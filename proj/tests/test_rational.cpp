#include "relgw/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace relgw;

TEST_CASE("factorial basics")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(4) == 24);
    CHECK(factorial(10) == 3628800);
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("binomial in range")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(7, 7) == 1);
    CHECK(binomial(60, 30) == Integer("118264581564861424"));
}

TEST_CASE("binomial out-of-range convention is zero")
{
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(-2, 1) == 0);
    CHECK(binomial(0, 1) == 0);
}

TEST_CASE("binomial matches the factorial quotient in range")
{
    for (long a = 0; a <= 25; ++a) {
        for (long b = 0; b <= a; ++b) {
            CHECK(binomial(a, b) == factorial(a) / (factorial(b) * factorial(a - b)));
        }
    }
}

TEST_CASE("Pascal identity holds with the zero convention")
{
    // includes b outside [0, a] on purpose
    for (long a = 1; a <= 40; ++a) {
        for (long b = -3; b <= a + 3; ++b) {
            CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
        }
    }
}

TEST_CASE("rational arithmetic round-trips")
{
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int i = 0; i < 200; ++i) {
        const Rational x(num(rng), den(rng));
        const Rational y(num(rng), den(rng));
        CHECK((x + y) - y == x);
        if (y != 0) {
            CHECK((x * y) / y == x);
        }
    }
}

TEST_CASE("rational serialization")
{
    CHECK(to_string(Rational(3, 4)) == "3/4");
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
    CHECK(to_string(Rational(7)) == "7");
    CHECK(to_string(Rational(8, 4)) == "2");
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-21") == Rational(-21));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x/y"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("parse/to_string round-trip")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int i = 0; i < 100; ++i) {
        const Rational x(num(rng), den(rng));
        CHECK(parse_rational(to_string(x)) == x);
    }
}

TEST_CASE("pow_rational")
{
    CHECK(pow_rational(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow_rational(Rational(-1, 2), 2) == Rational(1, 4));
    CHECK(pow_rational(Rational(5), 0) == 1);
}
