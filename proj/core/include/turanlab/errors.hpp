#pragma once

#include <stdexcept>
#include <string>

namespace turanlab {

// Invalid arguments: arity mismatches, out-of-range indices, malformed input.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The requested instance exceeds a configured desk-scale limit.
class ScaleGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace turanlab
