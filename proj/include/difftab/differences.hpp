#pragma once

#include "difftab/polynomial.hpp"
#include "difftab/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace difftab {

/**
 * The four classical difference stencils.
 *
 * For order n, step h, at point x:
 *   Forward      uses samples x, x+h, ..., x+nh
 *   Backward     uses samples x, x-h, ..., x-nh
 *   CentralHalf  uses samples x-nh/2, ..., x+nh/2   (half-step offsets)
 *   CentralFull  uses samples x-nh,   ..., x+nh     (whole-step offsets,
 *                one order spans 2h, so its divided form scales by (2h)^n)
 */
enum class DifferenceKind { Forward, Backward, CentralHalf, CentralFull };

std::string_view kindName(DifferenceKind kind);
std::optional<DifferenceKind> kindFromName(std::string_view name);

/// One difference evaluation: kind, order, step h > 0, expansion point.
struct DifferenceRequest {
    DifferenceKind kind;
    unsigned order;
    Rational step;
    Rational at;
};

/// Exact binomial coefficient.
BigInt binomial(unsigned n, unsigned k);

/// n! as an exact integer.
BigInt factorial(unsigned n);

/**
 * n-th difference of f via the alternating binomial sum for the requested
 * stencil.  Order 0 returns f(at) for every kind.
 */
Rational nthDifference(const Polynomial& f, const DifferenceRequest& req);

/**
 * Same value computed by the cascade: sample the stencil once, then fold
 * adjacent pairs n times.  Used as an independent path for cross-checks.
 */
Rational nthDifferenceCascade(const Polynomial& f, const DifferenceRequest& req);

/**
 * Divided difference: the n-th difference divided by the step power the
 * stencil actually spans (h^n for Forward/Backward/CentralHalf, (2h)^n for
 * CentralFull).
 */
Rational dividedDifference(const Polynomial& f, const DifferenceRequest& req);

/// Thrown when the three divided differences that should agree do not.
class NotEqualError : public std::domain_error {
public:
    NotEqualError(Rational forward, Rational backward, Rational centralHalf);

    const Rational& forwardValue() const { return forward_; }
    const Rational& backwardValue() const { return backward_; }
    const Rational& centralHalfValue() const { return centralHalf_; }

private:
    Rational forward_;
    Rational backward_;
    Rational centralHalf_;
};

/**
 * The common value of the forward, backward, and half-step central divided
 * differences of given order.  For polynomials of degree <= order they agree
 * identically; otherwise NotEqualError carries all three values.
 */
Rational equalityOperator(const Polynomial& f, unsigned order, const Rational& step,
                          const Rational& at);

/// Both sides of 2 * ((f(x+h) - f(x-h)) / (2h)) * h = Δf(x) + ∇f(x), the
/// first-order link between the central divided difference and the
/// forward/backward pair.  The two sides agree identically.
struct CentralIdentity {
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs == rhs; }
};

CentralIdentity centralIdentity(const Polynomial& f, const Rational& x, const Rational& h);

/**
 * True iff the difference of a sum is the sum of differences and the
 * difference of c*f is c times the difference of f, for this request.
 */
bool linearityCheck(const Polynomial& f, const Polynomial& g, const Rational& c,
                    const DifferenceRequest& req);

/// Sample offset (in units of step) of stencil term k for the given kind
/// and order; k runs 0..order.
Rational stencilOffset(DifferenceKind kind, unsigned order, unsigned k);

}  // namespace difftab
