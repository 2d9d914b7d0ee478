#pragma once

#include <stdexcept>
#include <string>

namespace liecomp {

/// Input that cannot be parsed or violates a structural invariant.
struct MalformedInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A rational function was evaluated at one of its poles.
struct PoleError : std::domain_error {
  PoleError(std::string pt, const std::string& what)
      : std::domain_error(what + " (pole at " + pt + ")"), point(std::move(pt)) {}
  std::string point;
};

/// Argument outside the mathematical domain of an operation (e.g. h <= 0
/// where a positive-definite inner product is needed).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// An operator component would send a monomial to a negative power of z.
struct NegativeExponentError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Sizes of matrices or representations do not agree.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace liecomp
