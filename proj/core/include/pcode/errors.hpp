#pragma once

#include <stdexcept>
#include <string>

namespace pcode {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : Error {
  using Error::Error;
};
struct DegreeMismatch : Error {
  using Error::Error;
};
struct NotBijection : Error {
  using Error::Error;
};
struct NotSubgroup : Error {
  using Error::Error;
};
struct NotNormal : Error {
  using Error::Error;
};
struct NotTwoGroup : Error {
  using Error::Error;
};
struct NotCyclicTwoGroup : Error {
  using Error::Error;
};
struct NotQuaternion : Error {
  using Error::Error;
};
struct ElementOutsideGroup : Error {
  using Error::Error;
};
struct IndexNotTwo : Error {
  using Error::Error;
};
struct ActionInvalid : Error {
  using Error::Error;
};
struct BadTag : Error {
  using Error::Error;
};
struct BadParameters : Error {
  using Error::Error;
};
struct ConditionViolated : Error {
  using Error::Error;
};
struct SearchFailed : Error {
  using Error::Error;
};
struct BadDecomposition : Error {
  using Error::Error;
};
struct PreconditionViolated : Error {
  using Error::Error;
};
struct ProductNotGroup : Error {
  using Error::Error;
};
struct InvalidTransversal : Error {
  using Error::Error;
};
struct NotComplement : Error {
  using Error::Error;
};
struct BudgetExhausted : Error {
  using Error::Error;
};
struct NotPrime : Error {
  using Error::Error;
};
struct Reducible : Error {
  using Error::Error;
};
struct BadSubset : Error {
  using Error::Error;
};
struct ConsistencyError : Error {
  using Error::Error;
};

// Syntax error in the group/subgroup spec DSL; `position` is a character
// offset into the input string.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

}  // namespace pcode
