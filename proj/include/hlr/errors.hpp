#pragma once

#include <stdexcept>
#include <string>

namespace hlr {

/// Dimension or tensor-shape mismatch between operands.
class ShapeError : public std::invalid_argument {
  public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation's stated precondition does not hold for the given input.
class PreconditionError : public std::invalid_argument {
  public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A construction could not produce a well-defined result (e.g. a quotient
/// tensor is not induced, or a boundary does not vanish on an ideal).
class ConstructionError : public std::runtime_error {
  public:
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hlr
