#include "difftab/format.hpp"

#include <doctest.h>

#include <limits>

using difftab::plainDecimal;

TEST_CASE("integers render without a decimal point") {
    CHECK(plainDecimal(0.0) == "0");
    CHECK(plainDecimal(-0.0) == "0");
    CHECK(plainDecimal(42.0) == "42");
    CHECK(plainDecimal(-42.0) == "-42");
    CHECK(plainDecimal(1e10) == "10000000000");
}

TEST_CASE("fractions keep significant digits and trim zeros") {
    CHECK(plainDecimal(0.5) == "0.5");
    CHECK(plainDecimal(-0.25) == "-0.25");
    CHECK(plainDecimal(3.14159265358979, 6) == "3.14159");
    CHECK(plainDecimal(1234.25, 3) == "1234");  // integer part always kept
}

TEST_CASE("large and small magnitudes avoid scientific notation") {
    CHECK(plainDecimal(6513215599.0) == "6513215599");
    CHECK(plainDecimal(1e-6, 3).substr(0, 8) == "0.000001");
    std::string tiny = plainDecimal(2.5e-11, 2);
    CHECK(tiny == "0.000000000025");
    CHECK(tiny.find('e') == std::string::npos);
    std::string huge = plainDecimal(1.5e15);
    CHECK(huge == "1500000000000000");
}

TEST_CASE("non-finite values") {
    CHECK(plainDecimal(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(plainDecimal(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(plainDecimal(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("degenerate precision clamps to one digit") {
    CHECK(plainDecimal(7.77, 0) == "8");
    CHECK(plainDecimal(7.77, -3) == "8");
}
