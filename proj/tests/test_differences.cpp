#include "difftab/differences.hpp"

#include <doctest.h>

using namespace difftab;

namespace {
const Polynomial kSquare = Polynomial::monomial(2);
const Polynomial kCube = Polynomial::monomial(3);
}  // namespace

TEST_CASE("binomial and factorial") {
    CHECK(binomial(0, 0) == BigInt(1));
    CHECK(binomial(5, 0) == BigInt(1));
    CHECK(binomial(5, 5) == BigInt(1));
    CHECK(binomial(10, 5) == BigInt(252));
    CHECK(binomial(52, 5) == BigInt(2598960));
    CHECK(factorial(0) == BigInt(1));
    CHECK(factorial(10) == BigInt(3628800));
    CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("kind names round trip") {
    for (DifferenceKind k : {DifferenceKind::Forward, DifferenceKind::Backward,
                             DifferenceKind::CentralHalf, DifferenceKind::CentralFull}) {
        CHECK(kindFromName(kindName(k)) == k);
    }
    CHECK(kindFromName("forward") == DifferenceKind::Forward);
    CHECK(kindFromName("central-half") == DifferenceKind::CentralHalf);
    CHECK_FALSE(kindFromName("sideways").has_value());
    CHECK_FALSE(kindFromName("").has_value());
}

TEST_CASE("stencil offsets") {
    CHECK(stencilOffset(DifferenceKind::Forward, 3, 0) == Rational(3));
    CHECK(stencilOffset(DifferenceKind::Forward, 3, 3) == Rational(0));
    CHECK(stencilOffset(DifferenceKind::Backward, 3, 0) == Rational(0));
    CHECK(stencilOffset(DifferenceKind::Backward, 3, 3) == Rational(-3));
    CHECK(stencilOffset(DifferenceKind::CentralHalf, 3, 0) == Rational(3, 2));
    CHECK(stencilOffset(DifferenceKind::CentralHalf, 3, 3) == Rational(-3, 2));
    CHECK(stencilOffset(DifferenceKind::CentralFull, 3, 0) == Rational(3));
    CHECK(stencilOffset(DifferenceKind::CentralFull, 3, 3) == Rational(-3));
}

TEST_CASE("first differences of x^2 at x = 3, h = 1") {
    Rational x(3);
    Rational h(1);
    CHECK(nthDifference(kSquare, {DifferenceKind::Forward, 1, h, x}) == Rational(7));
    CHECK(nthDifference(kSquare, {DifferenceKind::Backward, 1, h, x}) == Rational(5));
    CHECK(nthDifference(kSquare, {DifferenceKind::CentralHalf, 1, h, x}) == Rational(6));
    CHECK(nthDifference(kSquare, {DifferenceKind::CentralFull, 1, h, x}) == Rational(12));
}

TEST_CASE("order zero returns the sample") {
    DifferenceRequest req{DifferenceKind::Forward, 0, Rational(1, 2), Rational(5, 3)};
    CHECK(nthDifference(kCube, req) == kCube(Rational(5, 3)));
    CHECK(dividedDifference(kCube, req) == kCube(Rational(5, 3)));
}

TEST_CASE("second differences of x^3") {
    // Forward at x = 1, h = 1: 27 - 2*8 + 1.
    CHECK(nthDifference(kCube, {DifferenceKind::Forward, 2, Rational(1), Rational(1)}) ==
          Rational(12));
    // Full central at x = 2, h = 1: 64 - 2*8 + 0, divided by (2h)^2.
    DifferenceRequest full{DifferenceKind::CentralFull, 2, Rational(1), Rational(2)};
    CHECK(nthDifference(kCube, full) == Rational(48));
    CHECK(dividedDifference(kCube, full) == Rational(12));
    // Half central at x = 2, h = 1: 27 - 2*8 + 1, divided by h^2.
    DifferenceRequest half{DifferenceKind::CentralHalf, 2, Rational(1), Rational(2)};
    CHECK(nthDifference(kCube, half) == Rational(12));
    CHECK(dividedDifference(kCube, half) == Rational(12));
}

TEST_CASE("order-n divided difference of x^n is n!") {
    for (unsigned n : {1u, 2u, 3u, 4u, 7u}) {
        const Polynomial f = Polynomial::monomial(n);
        const Rational want{factorial(n)};
        for (DifferenceKind kind :
             {DifferenceKind::Forward, DifferenceKind::Backward,
              DifferenceKind::CentralHalf, DifferenceKind::CentralFull}) {
            CAPTURE(n);
            CAPTURE(kindName(kind));
            CHECK(dividedDifference(f, {kind, n, Rational(1, 2), Rational(-3, 7)}) == want);
            CHECK(dividedDifference(f, {kind, n, Rational(5, 3), Rational(11)}) == want);
        }
    }
}

TEST_CASE("difference of degree below order vanishes") {
    Polynomial p = Polynomial::parse("4,-2,1");
    for (DifferenceKind kind :
         {DifferenceKind::Forward, DifferenceKind::Backward, DifferenceKind::CentralHalf,
          DifferenceKind::CentralFull}) {
        CHECK(nthDifference(p, {kind, 3, Rational(2, 3), Rational(1, 5)}).isZero());
    }
}

TEST_CASE("step must be positive") {
    CHECK_THROWS_AS(nthDifference(kCube, {DifferenceKind::Forward, 1, Rational(0), Rational(0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        dividedDifference(kCube, {DifferenceKind::Forward, 1, Rational(-1), Rational(0)}),
        std::invalid_argument);
}

TEST_CASE("cascade equals the binomial sum") {
    Polynomial p = Polynomial::parse("1/3,0,-2,1,5/7");
    for (DifferenceKind kind :
         {DifferenceKind::Forward, DifferenceKind::Backward, DifferenceKind::CentralHalf,
          DifferenceKind::CentralFull}) {
        for (unsigned order : {0u, 1u, 2u, 5u, 9u}) {
            DifferenceRequest req{kind, order, Rational(3, 4), Rational(-7, 5)};
            CAPTURE(kindName(kind));
            CAPTURE(order);
            CHECK(nthDifference(p, req) == nthDifferenceCascade(p, req));
        }
    }
}

TEST_CASE("equality operator") {
    // Degree equal to the order: all three divided kinds coincide.
    Polynomial p = Polynomial::parse("1,4,-3/2");
    CHECK(equalityOperator(p, 2, Rational(1, 3), Rational(7, 2)) ==
          Rational(-3, 2) * Rational(factorial(2)));
    // Degree below the order: zero.
    CHECK(equalityOperator(p, 3, Rational(1), Rational(0)) == Rational(0));
    // Degree above the order: the three values differ and are all carried.
    try {
        equalityOperator(kCube, 2, Rational(1), Rational(0));
        FAIL("expected NotEqualError");
    } catch (const NotEqualError& e) {
        CHECK(e.forwardValue() == Rational(6));
        CHECK(e.backwardValue() == Rational(-6));
        CHECK(e.centralHalfValue() == Rational(0));
    }
}

TEST_CASE("central pair identity") {
    CentralIdentity id = centralIdentity(kCube, Rational(2), Rational(1));
    CHECK(id.lhs == Rational(26));
    CHECK(id.rhs == Rational(26));
    CHECK(id.holds());

    // Rational step and point.
    Polynomial p = Polynomial::parse("-2,1/2,0,0,3");
    CHECK(centralIdentity(p, Rational(-5, 6), Rational(2, 7)).holds());

    // The identity needs the full-step central difference: the half-step
    // variant gives 1/4 for x^3 at the origin where the pair sums to 2.
    Rational halfStep =
        nthDifference(kCube, {DifferenceKind::CentralHalf, 1, Rational(1), Rational(0)});
    CHECK(halfStep == Rational(1, 4));
    CHECK(Rational(2) * halfStep != centralIdentity(kCube, Rational(0), Rational(1)).rhs);
}

TEST_CASE("linearity") {
    Polynomial f = Polynomial::parse("1,2,3");
    Polynomial g = Polynomial::parse("-1/2,0,0,4");
    CHECK(linearityCheck(f, g, Rational(-7, 3),
                         {DifferenceKind::CentralFull, 2, Rational(1, 2), Rational(3)}));
    CHECK(linearityCheck(f, g, Rational(0),
                         {DifferenceKind::Backward, 4, Rational(2), Rational(-1)}));
}
