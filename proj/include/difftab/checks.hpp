#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace difftab {

/// Result of one seeded verification suite.
struct CheckOutcome {
    std::string name;
    bool passed;
    std::size_t cases;
    std::string detail;
};

/// Order-n divided differences of x^n equal n! for every kind, step, and
/// point: n = 1..12, 20 random steps in (0, 3], 10 random points each.
CheckOutcome checkFactorialLaw(std::uint64_t seed);

/// Random polynomials of degree n <= 8: the order-n divided differences of
/// every kind equal leadingCoeff * n!, and orders n+1, n+2 vanish.
CheckOutcome checkLeadingCoeffLaw(std::uint64_t seed);

/// Binomial-sum and cascade evaluations agree on 500 random requests.
CheckOutcome checkPathEquivalence(std::uint64_t seed);

/// 2 * (central divided difference) * h = forward + backward differences,
/// exactly, on 200 random (f, x, h).
CheckOutcome checkCentralIdentity(std::uint64_t seed);

/// Partial divided differences equal partial derivatives on random
/// monomials (arity <= 5, order <= 6), including the not-equal direction.
CheckOutcome checkPartialEqualitySuite(std::uint64_t seed);

/// Stacked-powers polynomials sum M_i*u_i^i: order-k difference in u_k is
/// M_k * k! * h^k for every k, including rational steps and zero M_k.
CheckOutcome checkStackedPowerSuite(std::uint64_t seed);

/// Diagonal cascade vs the signed sum law, derivative sums (unit steps),
/// and mixed-kind agreement on sum-of-powers shapes.
CheckOutcome checkSumRelationsSuite(std::uint64_t seed);

/// The structural difference properties: linearity, the constant rule,
/// shift invariance and annihilation for x^k, the mirror law with its
/// parity-dependent sign, first-difference absolute symmetry, the
/// order-2 central value at the origin, and central parity vanishing.
CheckOutcome checkStructuralProperties(std::uint64_t seed);

/// Runs every suite above with the same seed.
std::vector<CheckOutcome> runAllChecks(std::uint64_t seed);

/**
 * A place where a stated closed-form law disagrees with brute-force
 * evaluation (the difference table or the cascade oracle).  These are
 * reported, never asserted: agreesWithData records the observed outcome.
 */
struct ErrataFinding {
    std::string name;
    std::string statedLaw;
    std::string observed;
    bool agreesWithData;
};

/// The three stated-law comparisons: the opposite-direction sign factor,
/// the order-n central value coefficient, and the product-form diagonal law
/// at non-unit steps.
std::vector<ErrataFinding> errataFindings();

}  // namespace difftab
