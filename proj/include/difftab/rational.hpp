#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace difftab {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Arbitrary-precision rational number, always held in canonical form:
 * gcd(|num|, den) == 1 and den > 0.  The sign lives on the numerator.
 *
 * Representation and reduction are delegated to
 * boost::multiprecision::cpp_rational; this type fixes the external text
 * format ("p/q", "/q" omitted when q == 1) and the parsing rules used
 * throughout the library and the command line.
 */
class Rational {
public:
    using Backend = boost::multiprecision::cpp_rational;

    Rational() : value_(0) {}
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v) : value_(static_cast<std::int64_t>(v)) {}
    Rational(const BigInt& v) : value_(v) {}

    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) {
            throw std::invalid_argument("Rational: zero denominator");
        }
        // The backend requires a positive denominator.
        value_ = den < 0 ? Backend(-num, -den) : Backend(num, den);
    }

    explicit Rational(Backend v) : value_(std::move(v)) {}

    /// Parses "p" or "p/q" with an optional leading '-' on p only; q > 0.
    static Rational parse(std::string_view text);

    BigInt num() const { return numerator(value_); }
    BigInt den() const { return denominator(value_); }

    bool isZero() const { return value_ == 0; }
    bool isInteger() const { return denominator(value_) == 1; }

    /// -1, 0, or +1.
    int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

    Rational abs() const { return value_ < 0 ? Rational(Backend(-value_)) : *this; }

    Rational operator-() const { return Rational(Backend(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    Rational& operator/=(const Rational& o) {
        if (o.isZero()) {
            throw std::invalid_argument("Rational: division by zero");
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Nonnegative integer power; 0^0 == 1.
    Rational pow(unsigned e) const;

    /// "p" when integral, "p/q" otherwise; never uses exponent notation.
    std::string str() const;

    double toDouble() const { return value_.convert_to<double>(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    Backend value_;
};

inline Rational pow(const Rational& base, unsigned e) { return base.pow(e); }

}  // namespace difftab
