#pragma once

#include "difftab/errors.hpp"
#include "difftab/polynomial.hpp"
#include "difftab/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace difftab {

/**
 * Sparse multivariate polynomial with exact rational coefficients.
 *
 * Terms map an exponent vector (one entry per variable) to a nonzero
 * coefficient.  The arity is fixed at construction; every exponent vector
 * and every evaluation point must match it exactly.
 */
class MultiPolynomial {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPolynomial(std::size_t arity) : arity_(arity) {}

    /// coeff * u_0^{e_0} * ... * u_{arity-1}^{e_{arity-1}}.
    static MultiPolynomial monomial(std::size_t arity, Exponents exps, const Rational& coeff);

    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    /// Adds coeff * u^exps to the polynomial, merging with any existing term.
    void addTerm(Exponents exps, const Rational& coeff);

    Rational coeff(const Exponents& exps) const;

    /// Total degree of the highest term; empty map evaluates to 0 elsewhere,
    /// so the zero polynomial reports degree 0 here for simplicity.
    unsigned totalDegree() const;

    Rational operator()(std::span<const Rational> point) const;

    /// k-th partial derivative in variable var (exact).
    MultiPolynomial partialDerivative(std::size_t var, unsigned k = 1) const;

    /**
     * Restricts all variables except var to the coordinates of point,
     * producing the univariate polynomial t -> f(..., t, ...) in var.
     * point must have full arity; its var-th entry is ignored.
     */
    Polynomial freeze(std::size_t var, std::span<const Rational> point) const;

    /**
     * Substitutes u_i = start_i + t * scale_i, producing the univariate
     * polynomial in t that the polynomial takes along that line.
     */
    Polynomial alongLine(std::span<const Rational> start,
                         std::span<const Rational> scale) const;

    MultiPolynomial operator-() const;
    MultiPolynomial& operator+=(const MultiPolynomial& o);
    friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) {
        return a += b;
    }
    friend MultiPolynomial operator*(const Rational& c, const MultiPolynomial& m);

    friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) = default;

private:
    void checkArity(std::size_t n, const char* what) const;

    std::size_t arity_;
    TermMap terms_;
};

}  // namespace difftab
