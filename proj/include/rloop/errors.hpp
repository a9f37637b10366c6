#pragma once

#include <stdexcept>
#include <string>

namespace rloop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed data: non-square tables, out-of-range indices, bad names.
// Distinct from axiom failures, which are reported, not thrown.
struct StructuralError : Error {
  using Error::Error;
};

// LOOPTAB and other text inputs.
struct ParseError : Error {
  using Error::Error;
};

// x's row is not a bijection, so x \ y has no unique solution.
struct NotLeftSolvable : Error {
  explicit NotLeftSolvable(const std::string& element)
      : Error("left division undefined: row of '" + element + "' is not a bijection"),
        element_name(element) {}
  std::string element_name;
};

// A named precondition of an operation does not hold for the given input.
struct PreconditionFailed : Error {
  PreconditionFailed(const std::string& property, const std::string& detail)
      : Error("precondition '" + property + "' failed: " + detail), property(property) {}
  std::string property;
};

// Twist parameters violate their own constraints (identity in B, eta moving
// the identity, degree mismatch).
struct SpecViolation : Error {
  using Error::Error;
};

}  // namespace rloop
