#include "difftab/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace difftab {

void MultiPolynomial::checkArity(std::size_t n, const char* what) const {
    if (n != arity_) {
        throw ArityMismatch(std::string("MultiPolynomial: ") + what + " has arity " +
                            std::to_string(n) + ", expected " + std::to_string(arity_));
    }
}

MultiPolynomial MultiPolynomial::monomial(std::size_t arity, Exponents exps,
                                          const Rational& coeff) {
    MultiPolynomial m(arity);
    m.addTerm(std::move(exps), coeff);
    return m;
}

void MultiPolynomial::addTerm(Exponents exps, const Rational& coeff) {
    checkArity(exps.size(), "exponent vector");
    if (coeff.isZero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(std::move(exps), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.isZero()) {
            terms_.erase(it);
        }
    }
}

Rational MultiPolynomial::coeff(const Exponents& exps) const {
    checkArity(exps.size(), "exponent vector");
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPolynomial::totalDegree() const {
    unsigned best = 0;
    for (const auto& [exps, coeff] : terms_) {
        best = std::max(best, std::accumulate(exps.begin(), exps.end(), 0u));
    }
    return best;
}

Rational MultiPolynomial::operator()(std::span<const Rational> point) const {
    checkArity(point.size(), "evaluation point");
    Rational sum(0);
    for (const auto& [exps, coeff] : terms_) {
        Rational term = coeff;
        for (std::size_t v = 0; v < arity_; ++v) {
            term *= point[v].pow(exps[v]);
        }
        sum += term;
    }
    return sum;
}

MultiPolynomial MultiPolynomial::partialDerivative(std::size_t var, unsigned k) const {
    if (var >= arity_) {
        throw ArityMismatch("MultiPolynomial::partialDerivative: variable index " +
                            std::to_string(var) + " out of range");
    }
    MultiPolynomial result(arity_);
    for (const auto& [exps, coeff] : terms_) {
        if (exps[var] < k) {
            continue;
        }
        Rational factor(1);
        for (unsigned r = 0; r < k; ++r) {
            factor *= Rational(static_cast<long long>(exps[var] - r));
        }
        Exponents e = exps;
        e[var] -= k;
        result.addTerm(std::move(e), factor * coeff);
    }
    return result;
}

Polynomial MultiPolynomial::freeze(std::size_t var, std::span<const Rational> point) const {
    if (var >= arity_) {
        throw ArityMismatch("MultiPolynomial::freeze: variable index " +
                            std::to_string(var) + " out of range");
    }
    checkArity(point.size(), "evaluation point");
    std::vector<Rational> coeffs;
    for (const auto& [exps, coeff] : terms_) {
        Rational c = coeff;
        for (std::size_t v = 0; v < arity_; ++v) {
            if (v != var) {
                c *= point[v].pow(exps[v]);
            }
        }
        if (exps[var] >= coeffs.size()) {
            coeffs.resize(exps[var] + 1, Rational(0));
        }
        coeffs[exps[var]] += c;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial MultiPolynomial::alongLine(std::span<const Rational> start,
                                      std::span<const Rational> scale) const {
    checkArity(start.size(), "line start");
    checkArity(scale.size(), "line scale");
    Polynomial result;
    for (const auto& [exps, coeff] : terms_) {
        Polynomial term = Polynomial::constant(coeff);
        for (std::size_t v = 0; v < arity_; ++v) {
            Polynomial line({start[v], scale[v]});
            for (unsigned e = 0; e < exps[v]; ++e) {
                term = term * line;
            }
        }
        result += term;
    }
    return result;
}

MultiPolynomial MultiPolynomial::operator-() const {
    MultiPolynomial m(arity_);
    for (const auto& [exps, coeff] : terms_) {
        m.terms_.emplace(exps, -coeff);
    }
    return m;
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
    checkArity(o.arity_, "addend");
    for (const auto& [exps, coeff] : o.terms_) {
        addTerm(exps, coeff);
    }
    return *this;
}

MultiPolynomial operator*(const Rational& c, const MultiPolynomial& m) {
    MultiPolynomial result(m.arity());
    if (c.isZero()) {
        return result;
    }
    for (const auto& [exps, coeff] : m.terms()) {
        result.addTerm(exps, c * coeff);
    }
    return result;
}

}  // namespace difftab
