#include "difftab/partial.hpp"

#include "difftab/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace difftab {

namespace {

void validateRequest(const PartialRequest& req, std::size_t arity) {
    if (req.kind == DifferenceKind::CentralHalf) {
        throw std::invalid_argument(
            "partial differences: half-step central kind is not defined");
    }
    if (req.vars.empty()) {
        throw std::invalid_argument("partial differences: variable set is empty");
    }
    if (!std::is_sorted(req.vars.begin(), req.vars.end()) ||
        std::adjacent_find(req.vars.begin(), req.vars.end()) != req.vars.end()) {
        throw std::invalid_argument(
            "partial differences: variable set must be strictly increasing");
    }
    if (req.vars.back() >= arity) {
        throw ArityMismatch("partial differences: variable index " +
                            std::to_string(req.vars.back()) + " out of range for arity " +
                            std::to_string(arity));
    }
    if (req.steps.size() != req.vars.size()) {
        throw std::invalid_argument(
            "partial differences: need exactly one step per variable in the set");
    }
    for (const auto& h : req.steps) {
        if (!(h > Rational(0))) {
            throw std::invalid_argument("partial differences: steps must be positive");
        }
    }
    if (req.at.size() != arity) {
        throw ArityMismatch("partial differences: point has arity " +
                            std::to_string(req.at.size()) + ", expected " +
                            std::to_string(arity));
    }
}

Rational stepFor(const PartialRequest& req, std::size_t var) {
    for (std::size_t idx = 0; idx < req.vars.size(); ++idx) {
        if (req.vars[idx] == var) {
            return req.steps[idx];
        }
    }
    throw std::invalid_argument("partial differences: no step defined for variable " +
                                std::to_string(var));
}

Rational spanFactor(DifferenceKind kind) {
    return kind == DifferenceKind::CentralFull ? Rational(2) : Rational(1);
}

}  // namespace

Rational partialDifference(const MultiPolynomial& m, std::size_t var,
                           const PartialRequest& req) {
    validateRequest(req, m.arity());
    if (var >= m.arity()) {
        throw ArityMismatch("partialDifference: variable index out of range");
    }
    const Rational h = stepFor(req, var);
    Rational sum(0);
    std::vector<Rational> point(req.at.begin(), req.at.end());
    for (unsigned k = 0; k <= req.order; ++k) {
        Rational coeff(binomial(req.order, k));
        if (k % 2 == 1) {
            coeff = -coeff;
        }
        point[var] = req.at[var] + stencilOffset(req.kind, req.order, k) * h;
        sum += coeff * m(point);
    }
    return sum;
}

Rational partialDividedDifference(const MultiPolynomial& m, std::size_t var,
                                  const PartialRequest& req) {
    const Rational h = stepFor(req, var);
    return partialDifference(m, var, req) / (spanFactor(req.kind) * h).pow(req.order);
}

Rational diagonalDifference(const MultiPolynomial& m, const PartialRequest& req) {
    validateRequest(req, m.arity());
    // Sample f along the diagonal t -> at + t*steps at the stencil parameters,
    // then fold adjacent pairs order times, exactly as in the univariate
    // cascade.  The samples run from the highest parameter down (lowest up
    // for Forward) so one pairwise rule serves all kinds.
    const bool forward = req.kind == DifferenceKind::Forward;
    std::vector<Rational> v;
    v.reserve(req.order + 1);
    std::vector<Rational> point(req.at.begin(), req.at.end());
    for (unsigned i = 0; i <= req.order; ++i) {
        unsigned k = forward ? req.order - i : i;
        Rational t = stencilOffset(req.kind, req.order, k);
        for (std::size_t idx = 0; idx < req.vars.size(); ++idx) {
            std::size_t var = req.vars[idx];
            point[var] = req.at[var] + t * req.steps[idx];
        }
        v.push_back(m(point));
    }
    for (unsigned round = 0; round < req.order; ++round) {
        for (std::size_t i = 0; i + 1 + round < v.size(); ++i) {
            v[i] = forward ? v[i + 1] - v[i] : v[i] - v[i + 1];
        }
    }
    return v.empty() ? Rational(0) : v[0];
}

Rational diagonalDividedDifference(const MultiPolynomial& m, const PartialRequest& req) {
    return diagonalDifference(m, req) / spanFactor(req.kind).pow(req.order);
}

std::string PartialEqualityReport::summary() const {
    std::ostringstream os;
    os << "forward " << forwardDivided << ", backward " << backwardDivided
       << ", central " << centralDivided << ", derivative " << derivative << ": "
       << (allEqual ? "equal, coefficient " + coefficient.str() : "not equal");
    return os.str();
}

PartialEqualityReport checkPartialEquality(const MultiPolynomial& m, std::size_t var,
                                           unsigned order, const Rational& step,
                                           const std::vector<Rational>& at) {
    PartialRequest req{DifferenceKind::Forward, order, {var}, {step}, at};
    PartialEqualityReport r;
    r.forwardDivided = partialDividedDifference(m, var, req);
    req.kind = DifferenceKind::Backward;
    r.backwardDivided = partialDividedDifference(m, var, req);
    req.kind = DifferenceKind::CentralFull;
    r.centralDivided = partialDividedDifference(m, var, req);
    r.derivative = m.partialDerivative(var, order)(at);
    r.allEqual = r.forwardDivided == r.backwardDivided &&
                 r.backwardDivided == r.centralDivided && r.centralDivided == r.derivative;
    r.coefficient =
        r.allEqual ? r.derivative / Rational(factorial(order)) : Rational(0);
    return r;
}

namespace {

/// Coefficient of the u_k^k term (k 1-based) in a stacked-powers polynomial,
/// validating that every term is of that single-variable shape.
Rational stackedCoefficient(const MultiPolynomial& m, unsigned k) {
    for (const auto& [exps, coeff] : m.terms()) {
        std::size_t nonzero = 0;
        std::size_t which = 0;
        for (std::size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] != 0) {
                ++nonzero;
                which = v;
            }
        }
        if (nonzero != 1 || exps[which] != which + 1) {
            throw std::invalid_argument(
                "stacked-powers check: polynomial is not of the form sum M_i*u_i^i");
        }
    }
    if (k < 1 || k > m.arity()) {
        throw std::invalid_argument("stacked-powers check: k out of range");
    }
    MultiPolynomial::Exponents exps(m.arity(), 0);
    exps[k - 1] = k;
    return m.coeff(exps);
}

}  // namespace

std::string StackedPowerReport::summary() const {
    std::ostringstream os;
    os << "k = " << k << ": difference " << difference << " (expected "
       << expectedDifference << "), divided " << divided << ", derivative "
       << derivative << " -> " << (pass ? "pass" : "fail");
    return os.str();
}

StackedPowerReport checkStackedPower(const MultiPolynomial& m, unsigned k,
                                     const std::vector<Rational>& steps,
                                     const std::vector<Rational>& at) {
    if (steps.size() != m.arity()) {
        throw ArityMismatch("stacked-powers check: one step per variable required");
    }
    StackedPowerReport r;
    r.k = k;
    r.mk = stackedCoefficient(m, k);
    std::vector<std::size_t> vars(m.arity());
    for (std::size_t v = 0; v < m.arity(); ++v) {
        vars[v] = v;
    }
    PartialRequest req{DifferenceKind::Forward, k, vars, steps, at};
    r.difference = partialDifference(m, k - 1, req);
    const Rational fact(factorial(k));
    r.expectedDifference = r.mk * fact * steps[k - 1].pow(k);
    r.divided = partialDividedDifference(m, k - 1, req);
    r.derivative = m.partialDerivative(k - 1, k)(at);
    r.pass = r.difference == r.expectedDifference && r.divided == r.mk * fact &&
             r.derivative == r.mk * fact;
    return r;
}

std::string SumRelationsReport::summary() const {
    std::ostringstream os;
    os << "diagonal " << diagonal << ", signed sum " << signedSumForm
       << ", derivative sum " << derivativeSum << ", partial sum " << partialSum
       << ", product form " << productForm << " (unit steps: " << (unitSteps ? "yes" : "no")
       << ")";
    return os.str();
}

SumRelationsReport checkSumRelations(const MultiPolynomial& m, unsigned order,
                                     const std::vector<Rational>& steps,
                                     const std::vector<Rational>& at) {
    if (steps.size() != m.arity()) {
        throw ArityMismatch("sum-relations check: one step per variable required");
    }
    // Validate the shape sum s_i * u_i^order with s_i = +-1.
    std::vector<Rational> signs(m.arity(), Rational(0));
    for (const auto& [exps, coeff] : m.terms()) {
        std::size_t nonzero = 0;
        std::size_t which = 0;
        for (std::size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] != 0) {
                ++nonzero;
                which = v;
            }
        }
        if (nonzero != 1 || exps[which] != order || coeff.abs() != Rational(1)) {
            throw std::invalid_argument(
                "sum-relations check: polynomial is not of the form sum +-u_i^n");
        }
        signs[which] = coeff;
    }

    SumRelationsReport r;
    std::vector<std::size_t> vars(m.arity());
    for (std::size_t v = 0; v < m.arity(); ++v) {
        vars[v] = v;
    }
    r.diagonal = diagonalDifference(m, {DifferenceKind::Forward, order, vars, steps, at});

    const Rational fact(factorial(order));
    Rational signedSum(0);
    for (std::size_t v = 0; v < m.arity(); ++v) {
        signedSum += signs[v] * steps[v].pow(order);
    }
    r.signedSumForm = fact * signedSum;

    Rational derivativeSum(0);
    for (std::size_t v = 0; v < m.arity(); ++v) {
        derivativeSum += Polynomial::monomial(order, signs[v]).derivative(order)(at[v]);
    }
    r.derivativeSum = derivativeSum;

    Rational partialSum(0);
    for (std::size_t v = 0; v < m.arity(); ++v) {
        partialSum += m.partialDerivative(v, order)(at);
    }
    r.partialSum = partialSum;

    Rational product(1);
    for (const auto& h : steps) {
        product *= h.pow(order);
    }
    r.productForm = Rational(static_cast<long long>(m.arity())) * fact * product;

    r.unitSteps = std::all_of(steps.begin(), steps.end(),
                              [](const Rational& h) { return h == Rational(1); });
    r.signedSumMatches = r.diagonal == r.signedSumForm;
    r.derivativeSumMatches = r.diagonal == r.derivativeSum;
    r.partialSumMatches = r.diagonal == r.partialSum;
    r.productFormMatches = r.diagonal.abs() == r.productForm;
    return r;
}

}  // namespace difftab
