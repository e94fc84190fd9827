#pragma once

#include <stdexcept>
#include <string>

namespace quadzeta {

/// Malformed textual input (expressions, ranges).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument lies outside the mathematical domain of an operation:
/// rational where an irrational is required, division by zero, a
/// non-unit where a unit is required, and so on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Binary operation on elements of two different quadratic fields.
class MixedFieldError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A computation would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series denominator fell below the working precision floor.
class ResonanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quadzeta
