#pragma once

#include "difftab/rational.hpp"

#include <stdexcept>

namespace difftab {

/**
 * Symmetric grid x_i = i * step for integer i in [-halfRange, halfRange].
 */
class GridSpec {
public:
    GridSpec(const Rational& step, int halfRange) : step_(step), halfRange_(halfRange) {
        if (!(step > Rational(0))) {
            throw std::invalid_argument("GridSpec: step must be positive");
        }
        if (halfRange < 1) {
            throw std::invalid_argument("GridSpec: halfRange must be at least 1");
        }
    }

    const Rational& step() const { return step_; }
    int halfRange() const { return halfRange_; }
    int pointCount() const { return 2 * halfRange_ + 1; }

    bool contains(int i) const { return i >= -halfRange_ && i <= halfRange_; }

    /// x_i = i * step; valid for any integer i, not just grid indices.
    Rational point(int i) const { return Rational(static_cast<long long>(i)) * step_; }

private:
    Rational step_;
    int halfRange_;
};

}  // namespace difftab
