#include "difftab/rational.hpp"

#include <cctype>

namespace difftab {

namespace {

bool allDigits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view numPart = text;
    std::string_view denPart;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        numPart = text.substr(0, slash);
        denPart = text.substr(slash + 1);
    }

    bool negative = false;
    if (!numPart.empty() && numPart.front() == '-') {
        negative = true;
        numPart.remove_prefix(1);
    }
    if (!allDigits(numPart) || (!denPart.empty() && !allDigits(denPart)) ||
        (denPart.empty() && text.find('/') != std::string_view::npos)) {
        throw std::invalid_argument("Rational::parse: expected \"p\" or \"p/q\", got \"" +
                                    std::string(text) + "\"");
    }

    BigInt num{std::string(numPart)};
    if (negative) {
        num = -num;
    }
    BigInt den = denPart.empty() ? BigInt(1) : BigInt(std::string(denPart));
    if (den == 0) {
        throw std::invalid_argument("Rational::parse: zero denominator in \"" +
                                    std::string(text) + "\"");
    }
    return Rational(num, den);
}

Rational Rational::pow(unsigned e) const {
    Rational result(1);
    Rational base = *this;
    while (e > 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1u;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

std::string Rational::str() const {
    std::string s = num().str();
    if (!isInteger()) {
        s += '/';
        s += den().str();
    }
    return s;
}

}  // namespace difftab
