#pragma once

#include <stdexcept>
#include <string>

namespace slg {

// Input that fails structural validation: unreadable or malformed files,
// non-square tables, out-of-range entries, unparsable terms.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input that parses but violates a mathematical precondition.
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAGroup : MathError {
  using MathError::MathError;
};

struct NotAnSlg : MathError {
  using MathError::MathError;
};

struct MembershipViolation : MathError {
  using MathError::MathError;
};

// A term could not be evaluated: missing inverse map, missing decoration,
// or an unbound constant. `what()` starts with one of those kind tags.
struct EvalError : InvalidInput {
  using InvalidInput::InvalidInput;
};

}  // namespace slg
