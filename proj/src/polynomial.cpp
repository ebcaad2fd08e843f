#include "difftab/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace difftab {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().isZero()) {
        coeffs_.pop_back();
    }
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(unsigned n, const Rational& coeff) {
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = coeff;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::parse(std::string_view csv) {
    std::vector<Rational> c;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = csv.find(',', pos);
        std::string_view item = comma == std::string_view::npos
                                    ? csv.substr(pos)
                                    : csv.substr(pos, comma - pos);
        c.push_back(Rational::parse(item));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return Polynomial(std::move(c));
}

std::optional<unsigned> Polynomial::degree() const {
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return static_cast<unsigned>(coeffs_.size() - 1);
}

Rational Polynomial::leadingCoeff() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::coeff(unsigned i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative(unsigned k) const {
    Polynomial p = *this;
    for (unsigned round = 0; round < k; ++round) {
        if (p.coeffs_.empty()) {
            break;
        }
        std::vector<Rational> d;
        d.reserve(p.coeffs_.size() - 1);
        for (std::size_t i = 1; i < p.coeffs_.size(); ++i) {
            d.push_back(Rational(static_cast<long long>(i)) * p.coeffs_[i]);
        }
        p = Polynomial(std::move(d));
    }
    return p;
}

Polynomial Polynomial::shifted(const Rational& a) const {
    // Horner in the polynomial ring: p(x + a) = c_n, then repeatedly
    // multiply by (x + a) and add the next lower coefficient.
    Polynomial shift({a, Rational(1)});
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * shift + constant(*it);
    }
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& c : p.coeffs_) {
        c = -c;
    }
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    return *this += -o;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.isZero() || b.isZero()) {
        return Polynomial();
    }
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial q = p;
    for (auto& x : q.coeffs_) {
        x *= c;
    }
    q.trim();
    return q;
}

std::string Polynomial::str() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += coeffs_[i].str();
    }
    return s;
}

}  // namespace difftab
