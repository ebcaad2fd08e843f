#include "difftab/checks.hpp"

#include "difftab/differences.hpp"
#include "difftab/multipoly.hpp"
#include "difftab/partial.hpp"
#include "difftab/polynomial.hpp"
#include "difftab/rng.hpp"
#include "difftab/table.hpp"

#include <array>
#include <sstream>

namespace difftab {

namespace {

constexpr std::array<DifferenceKind, 4> kAllKinds{
    DifferenceKind::Forward, DifferenceKind::Backward, DifferenceKind::CentralHalf,
    DifferenceKind::CentralFull};

constexpr std::array<DifferenceKind, 3> kWholeStepKinds{
    DifferenceKind::Forward, DifferenceKind::Backward, DifferenceKind::CentralFull};

/// Random step in (0, 3].
Rational randStep(Rng& rng) {
    long long den = rng.intIn(1, 8);
    long long num = rng.intIn(1, 3 * den);
    return Rational(num, den);
}

/// Random point with numerator in [-20, 20] and denominator in [1, 8].
Rational randPoint(Rng& rng) {
    return Rational(rng.intIn(-20, 20), rng.intIn(1, 8));
}

Rational randCoeff(Rng& rng) {
    return Rational(rng.intIn(-9, 9), rng.intIn(1, 5));
}

Rational randNonzeroCoeff(Rng& rng) {
    long long num = rng.intIn(1, 9);
    if (rng.intIn(0, 1) == 1) {
        num = -num;
    }
    return Rational(num, rng.intIn(1, 5));
}

Polynomial randPoly(Rng& rng, unsigned degree) {
    std::vector<Rational> coeffs(degree + 1);
    for (unsigned i = 0; i < degree; ++i) {
        coeffs[i] = randCoeff(rng);
    }
    coeffs[degree] = randNonzeroCoeff(rng);
    return Polynomial(std::move(coeffs));
}

DifferenceKind randKind(Rng& rng) {
    return kAllKinds[static_cast<std::size_t>(rng.intIn(0, 3))];
}

std::string describe(const DifferenceRequest& req) {
    std::ostringstream os;
    os << kindName(req.kind) << " order " << req.order << " step " << req.step
       << " at " << req.at;
    return os.str();
}

CheckOutcome pass(std::string name, std::size_t cases, std::string detail) {
    return {std::move(name), true, cases, std::move(detail)};
}

CheckOutcome fail(std::string name, std::size_t cases, std::string detail) {
    return {std::move(name), false, cases, std::move(detail)};
}

}  // namespace

CheckOutcome checkFactorialLaw(std::uint64_t seed) {
    const std::string name = "factorial-law";
    Rng rng(seed);
    std::size_t cases = 0;
    for (unsigned n = 1; n <= 12; ++n) {
        const Polynomial f = Polynomial::monomial(n);
        const Rational want(factorial(n));
        for (int s = 0; s < 20; ++s) {
            const Rational h = randStep(rng);
            for (int p = 0; p < 10; ++p) {
                const Rational x = randPoint(rng);
                for (DifferenceKind kind : kAllKinds) {
                    DifferenceRequest req{kind, n, h, x};
                    Rational got = dividedDifference(f, req);
                    ++cases;
                    if (got != want) {
                        return fail(name, cases,
                                    "x^" + std::to_string(n) + ", " + describe(req) +
                                        ": got " + got.str() + ", want " + want.str());
                    }
                }
            }
        }
    }
    return pass(name, cases,
                "order-n divided differences of x^n equal n! for n = 1..12");
}

CheckOutcome checkLeadingCoeffLaw(std::uint64_t seed) {
    const std::string name = "leading-coefficient-law";
    Rng rng(seed);
    std::size_t cases = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = static_cast<unsigned>(rng.intIn(1, 8));
        const Polynomial f = randPoly(rng, n);
        const Rational want = f.leadingCoeff() * Rational(factorial(n));
        const Rational h = randStep(rng);
        const Rational x = randPoint(rng);
        for (DifferenceKind kind : kAllKinds) {
            DifferenceRequest req{kind, n, h, x};
            Rational got = dividedDifference(f, req);
            ++cases;
            if (got != want) {
                return fail(name, cases,
                            "degree " + std::to_string(n) + ", " + describe(req) +
                                ": got " + got.str() + ", want " + want.str());
            }
            for (unsigned j = 1; j <= 2; ++j) {
                DifferenceRequest above{kind, n + j, h, x};
                ++cases;
                if (!nthDifference(f, above).isZero()) {
                    return fail(name, cases,
                                "degree " + std::to_string(n) + ", " + describe(above) +
                                    ": expected exact 0");
                }
            }
        }
        Rational common = equalityOperator(f, n, h, x);
        ++cases;
        if (common != want) {
            return fail(name, cases,
                        "equality operator at order " + std::to_string(n) + ": got " +
                            common.str() + ", want " + want.str());
        }
    }
    return pass(name, cases,
                "order-n divided differences of degree-n polynomials equal "
                "leadingCoeff * n!; higher orders vanish");
}

CheckOutcome checkPathEquivalence(std::uint64_t seed) {
    const std::string name = "path-equivalence";
    Rng rng(seed);
    std::size_t cases = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const Polynomial f = randPoly(rng, static_cast<unsigned>(rng.intIn(0, 10)));
        DifferenceRequest req{randKind(rng), static_cast<unsigned>(rng.intIn(0, 12)),
                              randStep(rng), randPoint(rng)};
        ++cases;
        Rational sum = nthDifference(f, req);
        Rational cascade = nthDifferenceCascade(f, req);
        if (sum != cascade) {
            return fail(name, cases,
                        describe(req) + ": binomial sum " + sum.str() + " vs cascade " +
                            cascade.str());
        }
    }
    return pass(name, cases, "binomial-sum and cascade paths agree on 500 requests");
}

CheckOutcome checkCentralIdentity(std::uint64_t seed) {
    const std::string name = "central-pair-identity";
    Rng rng(seed);
    std::size_t cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial f = randPoly(rng, static_cast<unsigned>(rng.intIn(0, 8)));
        const Rational x = randPoint(rng);
        const Rational h = randStep(rng);
        CentralIdentity id = centralIdentity(f, x, h);
        ++cases;
        if (!id.holds()) {
            return fail(name, cases,
                        "x = " + x.str() + ", h = " + h.str() + ": lhs " + id.lhs.str() +
                            " vs rhs " + id.rhs.str());
        }
    }
    return pass(name, cases,
                "2 * central divided difference * h = forward + backward on 200 inputs");
}

CheckOutcome checkPartialEqualitySuite(std::uint64_t seed) {
    const std::string name = "partial-equality";
    Rng rng(seed);
    std::size_t cases = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t arity = static_cast<std::size_t>(rng.intIn(1, 5));
        const std::size_t var = static_cast<std::size_t>(rng.intIn(0, arity - 1));
        const unsigned order = static_cast<unsigned>(rng.intIn(1, 6));
        const Rational a = randNonzeroCoeff(rng);
        MultiPolynomial::Exponents exps(arity, 0);
        for (std::size_t w = 0; w < arity; ++w) {
            exps[w] = w == var ? order : static_cast<unsigned>(rng.intIn(0, 3));
        }
        const MultiPolynomial m = MultiPolynomial::monomial(arity, exps, a);
        const Rational h = randStep(rng);
        std::vector<Rational> at(arity);
        for (auto& c : at) {
            c = randPoint(rng);
        }
        PartialEqualityReport r = checkPartialEquality(m, var, order, h, at);
        ++cases;
        if (!r.allEqual) {
            return fail(name, cases, "monomial trial " + std::to_string(trial) +
                                         " expected equality: " + r.summary());
        }
        Rational frozen = a;
        for (std::size_t w = 0; w < arity; ++w) {
            if (w != var) {
                frozen *= at[w].pow(exps[w]);
            }
        }
        ++cases;
        if (r.coefficient != frozen) {
            return fail(name, cases,
                        "coefficient mismatch: got " + r.coefficient.str() + ", want " +
                            frozen.str());
        }

        // One degree above the order, the forward and backward divided
        // differences straddle the derivative and can never agree.
        MultiPolynomial::Exponents above(arity, 0);
        above[var] = order + 1;
        const MultiPolynomial tall = MultiPolynomial::monomial(arity, above, a);
        PartialEqualityReport r2 = checkPartialEquality(tall, var, order, h, at);
        ++cases;
        if (r2.allEqual) {
            return fail(name, cases,
                        "degree above order unexpectedly reported equal: " + r2.summary());
        }
    }
    return pass(name, cases,
                "partial divided differences equal partial derivatives on monomials; "
                "equality correctly fails one degree higher");
}

CheckOutcome checkStackedPowerSuite(std::uint64_t seed) {
    const std::string name = "stacked-powers";
    Rng rng(seed);
    std::size_t cases = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t arity = static_cast<std::size_t>(rng.intIn(2, 5));
        MultiPolynomial m(arity);
        for (std::size_t v = 0; v < arity; ++v) {
            if (rng.intIn(0, 4) == 0) {
                continue;  // leave an occasional coefficient at zero
            }
            MultiPolynomial::Exponents exps(arity, 0);
            exps[v] = static_cast<unsigned>(v + 1);
            m.addTerm(std::move(exps), randCoeff(rng));
        }
        std::vector<Rational> steps(arity);
        std::vector<Rational> at(arity);
        for (std::size_t v = 0; v < arity; ++v) {
            steps[v] = randStep(rng);
            at[v] = randPoint(rng);
        }
        for (unsigned k = 1; k <= arity; ++k) {
            StackedPowerReport r = checkStackedPower(m, k, steps, at);
            ++cases;
            if (!r.pass) {
                return fail(name, cases, "trial " + std::to_string(trial) + ": " +
                                             r.summary());
            }
        }
    }
    return pass(name, cases,
                "order-k differences in u_k recover M_k * k! * h^k across random "
                "stacked-powers polynomials");
}

CheckOutcome checkSumRelationsSuite(std::uint64_t seed) {
    const std::string name = "sum-relations";
    Rng rng(seed);
    std::size_t cases = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t arity = static_cast<std::size_t>(rng.intIn(1, 5));
        const unsigned order = static_cast<unsigned>(rng.intIn(1, 8));
        bool allPlus = true;
        MultiPolynomial m(arity);
        for (std::size_t v = 0; v < arity; ++v) {
            MultiPolynomial::Exponents exps(arity, 0);
            exps[v] = order;
            bool plus = rng.intIn(0, 1) == 1;
            allPlus = allPlus && plus;
            m.addTerm(std::move(exps), Rational(plus ? 1 : -1));
        }
        const bool unit = trial % 2 == 0;
        std::vector<Rational> steps(arity);
        std::vector<Rational> at(arity);
        for (std::size_t v = 0; v < arity; ++v) {
            steps[v] = unit ? Rational(1) : randStep(rng);
            at[v] = randPoint(rng);
        }
        SumRelationsReport r = checkSumRelations(m, order, steps, at);
        ++cases;
        if (!r.signedSumMatches) {
            return fail(name, cases,
                        "signed sum law failed at any-step trial " + std::to_string(trial) +
                            ": " + r.summary());
        }
        if (unit) {
            ++cases;
            if (!r.derivativeSumMatches || !r.partialSumMatches) {
                return fail(name, cases,
                            "derivative sums failed at unit steps: " + r.summary());
            }
            if (allPlus) {
                ++cases;
                if (!r.productFormMatches) {
                    return fail(name, cases,
                                "product form failed at unit steps, all signs +: " +
                                    r.summary());
                }
            }
        }
        // Mixed-kind agreement on the divided diagonal.
        std::vector<std::size_t> vars(arity);
        for (std::size_t v = 0; v < arity; ++v) {
            vars[v] = v;
        }
        Rational fwd = diagonalDividedDifference(
            m, {DifferenceKind::Forward, order, vars, steps, at});
        Rational bwd = diagonalDividedDifference(
            m, {DifferenceKind::Backward, order, vars, steps, at});
        Rational ctr = diagonalDividedDifference(
            m, {DifferenceKind::CentralFull, order, vars, steps, at});
        ++cases;
        if (fwd != bwd || bwd != ctr) {
            return fail(name, cases,
                        "diagonal divided differences disagree across kinds: forward " +
                            fwd.str() + ", backward " + bwd.str() + ", central " +
                            ctr.str());
        }
    }
    return pass(name, cases,
                "diagonal cascade matches the signed sum law; derivative sums agree at "
                "unit steps; kinds agree on divided diagonals");
}

CheckOutcome checkStructuralProperties(std::uint64_t seed) {
    const std::string name = "structural-properties";
    Rng rng(seed);
    std::size_t cases = 0;

    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial f = randPoly(rng, static_cast<unsigned>(rng.intIn(0, 6)));
        const Polynomial g = randPoly(rng, static_cast<unsigned>(rng.intIn(0, 6)));
        DifferenceRequest req{randKind(rng), static_cast<unsigned>(rng.intIn(0, 6)),
                              randStep(rng), randPoint(rng)};
        ++cases;
        if (!linearityCheck(f, g, randCoeff(rng), req)) {
            return fail(name, cases, "linearity failed for " + describe(req));
        }
    }

    for (int trial = 0; trial < 20; ++trial) {
        const Polynomial c = Polynomial::constant(randCoeff(rng));
        DifferenceRequest req{randKind(rng), static_cast<unsigned>(rng.intIn(1, 8)),
                              randStep(rng), randPoint(rng)};
        ++cases;
        if (!nthDifference(c, req).isZero()) {
            return fail(name, cases, "constant rule failed for " + describe(req));
        }
    }

    // Shift invariance with the exact constant, then annihilation above it.
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned k = static_cast<unsigned>(rng.intIn(1, 10));
        const Polynomial f = Polynomial::monomial(k);
        const Rational h = randStep(rng);
        for (DifferenceKind kind : kAllKinds) {
            Rational span = kind == DifferenceKind::CentralFull ? Rational(2) * h : h;
            Rational want = Rational(factorial(k)) * span.pow(k);
            Rational a = nthDifference(f, {kind, k, h, randPoint(rng)});
            Rational b = nthDifference(f, {kind, k, h, randPoint(rng)});
            ++cases;
            if (a != b || a != want) {
                return fail(name, cases,
                            "shift invariance failed for x^" + std::to_string(k) + " " +
                                std::string(kindName(kind)) + ": " + a.str() + ", " +
                                b.str() + ", want " + want.str());
            }
            const unsigned j = static_cast<unsigned>(rng.intIn(1, 3));
            ++cases;
            if (!nthDifference(f, {kind, k + j, h, randPoint(rng)}).isZero()) {
                return fail(name, cases,
                            "annihilation failed for x^" + std::to_string(k) + " at order " +
                                std::to_string(k + j));
            }
        }
    }

    // Mirror law: the opposite-direction difference at the mirrored point
    // carries (-1)^k for even powers and (-1)^(k+1) for odd powers.
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = static_cast<unsigned>(rng.intIn(1, 10));
        const unsigned k = static_cast<unsigned>(rng.intIn(1, n));
        const Polynomial f = Polynomial::monomial(n);
        const Rational h = randStep(rng);
        const Rational x = Rational(rng.intIn(0, 10)) * h;
        Rational fwd = nthDifference(f, {DifferenceKind::Forward, k, h, -x});
        Rational bwd = nthDifference(f, {DifferenceKind::Backward, k, h, x});
        bool evenFactor = (n % 2 == 0) ? (k % 2 == 0) : (k % 2 == 1);
        Rational want = evenFactor ? bwd : -bwd;
        ++cases;
        if (fwd != want) {
            return fail(name, cases,
                        "mirror law failed for x^" + std::to_string(n) + " order " +
                            std::to_string(k) + ": forward at -x " + fwd.str() +
                            ", signed backward " + want.str());
        }
        ++cases;
        if (fwd.abs() != bwd.abs()) {
            return fail(name, cases, "absolute mirror symmetry failed");
        }
    }

    // Central behavior at the origin: the order-2 value and parity vanishing.
    for (int trial = 0; trial < 20; ++trial) {
        const Rational h = randStep(rng);
        const unsigned even = 2 * static_cast<unsigned>(rng.intIn(1, 5));
        const unsigned odd = even + 1;
        ++cases;
        Rational d2 = nthDifference(Polynomial::monomial(even),
                                    {DifferenceKind::CentralFull, 2, h, Rational(0)});
        if (even >= 2 && d2 != Rational(2) * (Rational(2) * h).pow(even)) {
            return fail(name, cases,
                        "order-2 central value at origin failed for x^" +
                            std::to_string(even) + ", h = " + h.str());
        }
        const unsigned j = static_cast<unsigned>(rng.intIn(0, 2));
        ++cases;
        if (!nthDifference(Polynomial::monomial(even),
                           {DifferenceKind::CentralFull, 2 * j + 1, h, Rational(0)})
                 .isZero()) {
            return fail(name, cases, "odd-order central of even power at origin not zero");
        }
        ++cases;
        if (!nthDifference(Polynomial::monomial(odd),
                           {DifferenceKind::CentralFull, 2 * (j + 1), h, Rational(0)})
                 .isZero()) {
            return fail(name, cases, "even-order central of odd power at origin not zero");
        }
    }

    return pass(name, cases,
                "linearity, constant rule, shift invariance, annihilation, mirror law, "
                "and origin central parity all hold");
}

std::vector<CheckOutcome> runAllChecks(std::uint64_t seed) {
    return {
        checkFactorialLaw(seed),      checkLeadingCoeffLaw(seed),
        checkPathEquivalence(seed),   checkCentralIdentity(seed),
        checkPartialEqualitySuite(seed), checkStackedPowerSuite(seed),
        checkSumRelationsSuite(seed), checkStructuralProperties(seed),
    };
}

std::vector<ErrataFinding> errataFindings() {
    std::vector<ErrataFinding> findings;

    {
        // Claimed: one global factor (-1)^(n-1) between the two directions.
        // The mirrored pair at |i| = 2, order 2 in the power-10 table has
        // equal signs, so for even n the factor must depend on the order.
        const Polynomial f = Polynomial::monomial(10);
        Rational fwd = nthDifference(f, {DifferenceKind::Forward, 2, 1, Rational(-2)});
        Rational bwd = nthDifference(f, {DifferenceKind::Backward, 2, 1, Rational(2)});
        std::ostringstream observed;
        observed << "for x^10, order 2 at mirrored points +-2: forward " << fwd
                 << ", backward " << bwd
                 << "; the stated factor (-1)^(10-1) = -1 predicts opposite signs, but "
                    "the values are equal; the data follows (-1)^k (even power) / "
                    "(-1)^(k+1) (odd power)";
        findings.push_back({"opposite-direction sign factor",
                            "forward = (-1)^(n-1) * backward at mirrored points, all "
                            "orders k <= n",
                            observed.str(), fwd == -bwd});
    }

    {
        // Claimed: the order-n full central difference of x^n is n!*2m*h^n.
        // The power-10 table's origin row starts at 10! * 2^10 instead.
        const Polynomial f = Polynomial::monomial(10);
        Rational got =
            nthDifference(f, {DifferenceKind::CentralFull, 10, 1, Rational(0)});
        Rational stated = Rational(factorial(10)) * Rational(2);
        Rational spanForm = Rational(factorial(10)) * Rational(2).pow(10);
        std::ostringstream observed;
        observed << "order-10 full central of x^10 at the origin, unit step: " << got
                 << " = 10! * 2^10 (the span form n!*(2mh)^n); the stated coefficient "
                    "n!*2m*h^n gives "
                 << stated;
        findings.push_back({"order-n central value coefficient",
                            "central order-n value of x^n is n! * 2m * h^n",
                            observed.str(), got == stated && got != spanForm});
    }

    {
        // Claimed: the diagonal order-n difference of u_1^n + ... + u_k^n is
        // +-k * n! * (h_1...h_k)^n.  The cascade matches the signed sum law
        // n! * sum h_i^n instead once steps differ.
        MultiPolynomial m(2);
        m.addTerm({2, 0}, Rational(1));
        m.addTerm({0, 2}, Rational(1));
        std::vector<Rational> steps{Rational(1), Rational(1, 2)};
        std::vector<Rational> at{Rational(0), Rational(0)};
        SumRelationsReport r = checkSumRelations(m, 2, steps, at);
        std::ostringstream observed;
        observed << "u^2 + v^2, order 2, steps (1, 1/2): cascade " << r.diagonal
                 << ", signed sum form " << r.signedSumForm << ", product form "
                 << r.productForm << "; the product form only agrees at unit steps";
        findings.push_back({"diagonal product form at non-unit steps",
                            "diagonal order-n difference = +-k * n! * (h_1...h_k)^n",
                            observed.str(), r.productFormMatches});
    }

    return findings;
}

}  // namespace difftab
