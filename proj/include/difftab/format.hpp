#pragma once

#include <string>

namespace difftab {

/**
 * Plain decimal rendering of a double: fixed-point with the given number of
 * significant digits, trailing zeros trimmed, never scientific notation.
 * Zero renders as "0"; non-finite values render as "inf"/"-inf"/"nan".
 */
std::string plainDecimal(double v, int significant = 12);

}  // namespace difftab
