#include "difftab/rational.hpp"

#include <doctest.h>

#include <sstream>

using difftab::BigInt;
using difftab::Rational;

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational(3, -9).str() == "-1/3");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(BigInt(10), BigInt(5)).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse accepts integers and fractions") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("123456789012345678901234567890/2").str() ==
          "61728394506172839450617283945");
}

TEST_CASE("parse rejects malformed text") {
    for (const char* bad : {"", "/", "1/", "/2", "1/2/3", "1.5", "a", "1/-2", "- 1",
                            "+1", " 1", "1 ", "0x10"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    }
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3);
    Rational b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);

    // A sum that would overflow any fixed-width type.
    Rational big = Rational(BigInt("9223372036854775807")) * Rational(BigInt("9223372036854775807"));
    CHECK(big.str() == "85070591730234615847396907784232501249");
}

TEST_CASE("comparison is a total order") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(5) > Rational(9, 2));
}

TEST_CASE("pow uses exact exponentiation") {
    CHECK(Rational(2).pow(10) == Rational(1024));
    CHECK(Rational(1, 2).pow(3) == Rational(1, 8));
    CHECK(Rational(-2, 3).pow(2) == Rational(4, 9));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK(Rational(7).pow(0) == Rational(1));
}

TEST_CASE("accessors") {
    Rational r(-6, 8);
    CHECK(r.num() == BigInt(-3));
    CHECK(r.den() == BigInt(4));
    CHECK(r.sign() == -1);
    CHECK(r.abs() == Rational(3, 4));
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(0).isZero());
    CHECK(Rational(4, 2).isInteger());
    CHECK_FALSE(Rational(1, 2).isInteger());
    CHECK(r.toDouble() == doctest::Approx(-0.75));
}

TEST_CASE("str and stream output") {
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-7).str() == "-7");
    CHECK(Rational(22, 7).str() == "22/7");
    std::ostringstream os;
    os << Rational(-22, 7);
    CHECK(os.str() == "-22/7");
}
