#pragma once

#include <stdexcept>
#include <string>

namespace semibrick {

// Every failure raised by the core derives from Error. The C API maps the
// concrete class onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller asked for something the operation does not accept (bad flag,
// unknown builtin, mismatched quivers).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Input data violates an invariant of its declared type.
class InvalidInput : public Error {
 public:
  InvalidInput(const std::string& what, std::string location = {})
      : Error(location.empty() ? what : location + ": " + what),
        location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ShapeError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class IntertwiningError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// A precondition of a mathematical statement does not hold (e.g. uniserial
// check on a semi-brick that violates its hypotheses). Distinct from "false".
class InapplicableError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace semibrick
