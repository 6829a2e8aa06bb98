#include "smc/rational.hpp"

#include "doctest.h"

#include <stdexcept>

using smc::Rational;

TEST_CASE("decimal strings parse exactly") {
    CHECK(smc::parse_decimal("0") == Rational(0));
    CHECK(smc::parse_decimal("17") == Rational(17));
    CHECK(smc::parse_decimal("-3") == Rational(-3));
    CHECK(smc::parse_decimal("2.5") == Rational(5, 2));
    CHECK(smc::parse_decimal("0.125") == Rational(1, 8));
    CHECK(smc::parse_decimal("-0.2") == Rational(-1, 5));
    CHECK(smc::parse_decimal("10.00") == Rational(10));
    CHECK(smc::parse_decimal("0.1") == Rational(1, 10));
    // 0.1 must not be a binary approximation.
    CHECK(smc::parse_decimal("0.1") * 10 == Rational(1));
    CHECK(smc::parse_decimal("+4.75") == Rational(19, 4));
    CHECK(smc::parse_decimal(".5") == Rational(1, 2));
    CHECK(smc::parse_decimal("3.") == Rational(3));
}

TEST_CASE("malformed decimals are rejected") {
    CHECK_THROWS_AS(smc::parse_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(smc::parse_decimal("."), std::invalid_argument);
    CHECK_THROWS_AS(smc::parse_decimal("-"), std::invalid_argument);
    CHECK_THROWS_AS(smc::parse_decimal("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(smc::parse_decimal("1e5"), std::invalid_argument);
    CHECK_THROWS_AS(smc::parse_decimal(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(smc::parse_decimal("1 "), std::invalid_argument);
}

TEST_CASE("rationals format as decimals when possible") {
    CHECK(smc::format_rational(Rational(0)) == "0");
    CHECK(smc::format_rational(Rational(42)) == "42");
    CHECK(smc::format_rational(Rational(-7)) == "-7");
    CHECK(smc::format_rational(Rational(5, 2)) == "2.5");
    CHECK(smc::format_rational(Rational(1, 8)) == "0.125");
    CHECK(smc::format_rational(Rational(-1, 5)) == "-0.2");
    CHECK(smc::format_rational(Rational(1, 10)) == "0.1");
    CHECK(smc::format_rational(Rational(123, 100)) == "1.23");
}

TEST_CASE("non-terminating ratios format as fractions") {
    CHECK(smc::format_rational(Rational(1, 3)) == "1/3");
    CHECK(smc::format_rational(Rational(-5, 6)) == "-5/6");
    CHECK(smc::format_rational(Rational(22, 7)) == "22/7");
}

TEST_CASE("parse and format round-trip") {
    for (const char* s : {"0", "1", "-1", "2.5", "0.125", "1000.001", "-0.875"}) {
        CHECK(smc::format_rational(smc::parse_decimal(s)) ==
              smc::format_rational(smc::parse_decimal(
                  smc::format_rational(smc::parse_decimal(s)))));
    }
}
