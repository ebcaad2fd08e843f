#pragma once

#include <stdexcept>
#include <string>

namespace difftab {

/// Point/polynomial arity does not match the expected variable count.
class ArityMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input admits no meaningful result (all-zero data, exact-zero errors, ...).
class DegenerateInput : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A difference stencil would reference grid points outside the grid.
class StencilOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Too few samples for the requested operation.
class TooFewPoints : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace difftab
