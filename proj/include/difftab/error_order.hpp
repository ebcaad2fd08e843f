#pragma once

#include "difftab/differences.hpp"
#include "difftab/polynomial.hpp"
#include "difftab/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace difftab {

/**
 * Exact residual between an order-k forward divided difference and the k-th
 * derivative, as a polynomial in x with the step bound to a concrete
 * rational.  actualDegree is empty for the zero polynomial.  For a degree-n
 * input and k <= n the residual degree is at most n-k-1, one below the
 * looser n-k bound carried alongside for reference.
 */
struct ResidualReport {
    Polynomial residual;
    unsigned looseBoundDegree;
    std::optional<unsigned> actualDegree;
};

/// Residual for f(x) = x^n.  Requires 1 <= k <= n, step > 0.
ResidualReport residualPolynomial(unsigned n, unsigned k, const Rational& step);

/// Residual for an arbitrary polynomial.  Requires 1 <= k <= degree(p), step > 0.
ResidualReport residualPolynomial(const Polynomial& p, unsigned k, const Rational& step);

/**
 * Least-squares slope of log|error| versus log step, where the error is the
 * order-k divided difference of f at x0 minus the exact k-th derivative
 * value.  Forward/backward first differences of smooth functions give ~1,
 * half-step central gives ~2.  Binary64 throughout.
 *
 * Requires at least 3 steps, all positive and strictly decreasing.  Throws
 * DegenerateInput when any error is exactly zero (the difference is exact,
 * so no order is measurable).
 */
double empiricalOrder(const std::function<double(double)>& f, double exactDerivative,
                      DifferenceKind kind, unsigned k, double x0,
                      const std::vector<double>& steps);

}  // namespace difftab
