#pragma once

#include "difftab/rational.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace difftab {

/**
 * Dense univariate polynomial with exact rational coefficients.
 *
 * Coefficients are stored lowest power first; the vector never ends in a
 * zero, so the zero polynomial is the empty vector and degree() is empty
 * for it.  All operations are exact.
 */
class Polynomial {
public:
    /// Zero polynomial.
    Polynomial() = default;

    /// Takes coefficients lowest power first; trailing zeros are trimmed.
    explicit Polynomial(std::vector<Rational> coeffs);

    Polynomial(std::initializer_list<Rational> coeffs)
        : Polynomial(std::vector<Rational>(coeffs)) {}

    static Polynomial constant(const Rational& c);

    /// The monomial x^n.
    static Polynomial monomial(unsigned n, const Rational& coeff = Rational(1));

    /// Parses "c0,c1,...,cn"; each c is "p" or "p/q".
    static Polynomial parse(std::string_view csv);

    bool isZero() const { return coeffs_.empty(); }

    /// Empty for the zero polynomial.
    std::optional<unsigned> degree() const;

    /// Zero for the zero polynomial.
    Rational leadingCoeff() const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i, zero when i exceeds the degree.
    Rational coeff(unsigned i) const;

    /// Horner evaluation.
    Rational operator()(const Rational& x) const;

    /// k-th derivative (exact).
    Polynomial derivative(unsigned k = 1) const;

    /// p(x + a), expanded exactly.
    Polynomial shifted(const Rational& a) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Comma-separated coefficient list, lowest power first; "0" when zero.
    std::string str() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace difftab
