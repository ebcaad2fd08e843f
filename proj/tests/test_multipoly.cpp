#include "difftab/multipoly.hpp"

#include "difftab/errors.hpp"

#include <doctest.h>

#include <vector>

using difftab::ArityMismatch;
using difftab::MultiPolynomial;
using difftab::Polynomial;
using difftab::Rational;

namespace {
std::vector<Rational> pt(std::initializer_list<Rational> v) { return {v}; }
}  // namespace

TEST_CASE("term bookkeeping merges and erases") {
    MultiPolynomial m(2);
    m.addTerm({1, 1}, Rational(2));
    m.addTerm({1, 1}, Rational(3));
    CHECK(m.coeff({1, 1}) == Rational(5));
    m.addTerm({1, 1}, Rational(-5));
    CHECK(m.isZero());
    CHECK(m.coeff({1, 1}) == Rational(0));
    CHECK_THROWS_AS(m.addTerm({1}, Rational(1)), ArityMismatch);
}

TEST_CASE("evaluation") {
    // 3*u^2*v - v + 1/2
    MultiPolynomial m(2);
    m.addTerm({2, 1}, Rational(3));
    m.addTerm({0, 1}, Rational(-1));
    m.addTerm({0, 0}, Rational(1, 2));
    auto p = pt({Rational(2), Rational(1, 3)});
    CHECK(m(p) == Rational(4) - Rational(1, 3) + Rational(1, 2));
    CHECK_THROWS_AS(m(pt({Rational(1)})), ArityMismatch);
}

TEST_CASE("total degree") {
    MultiPolynomial m(3);
    CHECK(m.totalDegree() == 0u);
    m.addTerm({1, 2, 0}, Rational(1));
    m.addTerm({0, 0, 4}, Rational(1));
    CHECK(m.totalDegree() == 4u);
}

TEST_CASE("partial derivative") {
    // d^2/du^2 (u^3*v) = 6*u*v
    MultiPolynomial m = MultiPolynomial::monomial(2, {3, 1}, Rational(1));
    MultiPolynomial d = m.partialDerivative(0, 2);
    CHECK(d.coeff({1, 1}) == Rational(6));
    CHECK(d(pt({Rational(2), Rational(5)})) == Rational(60));
    CHECK(m.partialDerivative(0, 4).isZero());
    CHECK(m.partialDerivative(1) == MultiPolynomial::monomial(2, {3, 0}, Rational(1)));
}

TEST_CASE("freeze to univariate") {
    // u^2*v + v^2 frozen at v = 3 in u: 3u^2 + 9.
    MultiPolynomial m(2);
    m.addTerm({2, 1}, Rational(1));
    m.addTerm({0, 2}, Rational(1));
    Polynomial f = m.freeze(0, pt({Rational(99), Rational(3)}));
    CHECK(f == Polynomial({Rational(9), Rational(0), Rational(3)}));
    // Freezing in v at u = 2: 4v + v^2.
    Polynomial g = m.freeze(1, pt({Rational(2), Rational(0)}));
    CHECK(g == Polynomial({Rational(0), Rational(4), Rational(1)}));
    CHECK_THROWS_AS(m.freeze(0, pt({Rational(1)})), ArityMismatch);
}

TEST_CASE("restriction to a line") {
    // u*v along (u, v) = (1 + t, 2 - t): (1+t)(2-t) = 2 + t - t^2.
    MultiPolynomial m = MultiPolynomial::monomial(2, {1, 1}, Rational(1));
    Polynomial g = m.alongLine(pt({Rational(1), Rational(2)}),
                               pt({Rational(1), Rational(-1)}));
    CHECK(g == Polynomial({Rational(2), Rational(1), Rational(-1)}));
    CHECK_THROWS_AS(m.alongLine(pt({Rational(1)}), pt({Rational(1), Rational(2)})),
                    ArityMismatch);
}

TEST_CASE("addition and scaling") {
    MultiPolynomial a = MultiPolynomial::monomial(2, {1, 0}, Rational(1));
    MultiPolynomial b = MultiPolynomial::monomial(2, {0, 1}, Rational(2));
    MultiPolynomial s = a + b;
    CHECK(s.coeff({1, 0}) == Rational(1));
    CHECK(s.coeff({0, 1}) == Rational(2));
    CHECK((Rational(3) * s).coeff({0, 1}) == Rational(6));
    CHECK((-s).coeff({1, 0}) == Rational(-1));
}
