#pragma once

#include "difftab/differences.hpp"
#include "difftab/multipoly.hpp"
#include "difftab/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace difftab {

/**
 * One partial-difference evaluation over a multivariate polynomial.
 *
 * vars is the variable set M (strictly increasing indices); steps holds one
 * positive step per entry of vars; at is a full-arity evaluation point.
 * CentralHalf is not defined for partial differences; the admissible kinds
 * are Forward, Backward, and CentralFull.
 */
struct PartialRequest {
    DifferenceKind kind;
    unsigned order;
    std::vector<std::size_t> vars;
    std::vector<Rational> steps;
    std::vector<Rational> at;
};

/**
 * Order-n difference in the single variable var, all other coordinates
 * frozen at req.at.  var must appear in req.vars so a step is defined for
 * it.  Evaluated as the alternating binomial sum over shifted points.
 */
Rational partialDifference(const MultiPolynomial& m, std::size_t var,
                           const PartialRequest& req);

/// partialDifference divided by step^order (or (2*step)^order for CentralFull).
Rational partialDividedDifference(const MultiPolynomial& m, std::size_t var,
                                  const PartialRequest& req);

/**
 * Order-n difference that shifts every variable of M simultaneously, each
 * by its own step, via the n-fold pairwise cascade.  Equivalent to the
 * univariate difference of g(t) = m(at + t*steps) at t = 0 with unit step.
 * This is the ground-truth value the closed-form sum and product laws are
 * compared against.
 */
Rational diagonalDifference(const MultiPolynomial& m, const PartialRequest& req);

/// diagonalDifference divided by 1^order (Forward/Backward) or 2^order
/// (CentralFull), i.e. the divided difference of g(t) at unit parameter step.
Rational diagonalDividedDifference(const MultiPolynomial& m, const PartialRequest& req);

/**
 * Comparison of the three partial divided differences of order n in one
 * variable against the n-th partial derivative at the same point.  All four
 * agree exactly when the polynomial has degree <= n in that variable; the
 * report also carries the common value as a multiple of n!.
 */
struct PartialEqualityReport {
    Rational forwardDivided;
    Rational backwardDivided;
    Rational centralDivided;
    Rational derivative;
    bool allEqual;
    /// derivative / order!; the report's "A" such that the common value is A*n!.
    Rational coefficient;

    std::string summary() const;
};

PartialEqualityReport checkPartialEquality(const MultiPolynomial& m, std::size_t var,
                                           unsigned order, const Rational& step,
                                           const std::vector<Rational>& at);

/**
 * For a stacked-powers polynomial sum_i M_i * u_i^i (variable i carries
 * exponent i, 1-based), checks that the order-k forward difference in u_k
 * equals M_k * k! * h^k, its divided form equals M_k * k!, and the k-th
 * partial derivative agrees.
 */
struct StackedPowerReport {
    unsigned k;
    Rational mk;
    Rational difference;
    Rational expectedDifference;
    Rational divided;
    Rational derivative;
    bool pass;

    std::string summary() const;
};

StackedPowerReport checkStackedPower(const MultiPolynomial& m, unsigned k,
                                     const std::vector<Rational>& steps,
                                     const std::vector<Rational>& at);

/**
 * For f = s_1*u_1^n + ... + s_k*u_k^n with s_i = +-1, compares the diagonal
 * cascade against the closed forms: the signed sum law n!*sum s_i*h_i^n,
 * the sum of n-th single-variable derivatives, the sum of n-th partial
 * derivatives (both derivative sums require unit steps to match), and the
 * product law k*n!*prod h_i^n compared by absolute value.  Every quantity
 * is carried in the report so disagreements are localizable.
 */
struct SumRelationsReport {
    Rational diagonal;
    Rational signedSumForm;
    Rational derivativeSum;
    Rational partialSum;
    Rational productForm;
    bool unitSteps;
    bool signedSumMatches;
    bool derivativeSumMatches;
    bool partialSumMatches;
    bool productFormMatches;

    std::string summary() const;
};

SumRelationsReport checkSumRelations(const MultiPolynomial& m, unsigned order,
                                     const std::vector<Rational>& steps,
                                     const std::vector<Rational>& at);

}  // namespace difftab
