#pragma once

#include <stdexcept>
#include <string>

namespace koebe {

// Base of everything the library throws on purpose. Verdicts such as
// "unstable" or "outside" are ordinary return values, never exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's stated precondition (a_n == 0 for a
// stability test, q(0) != 0 for a covering bound, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Overflow, non-finite intermediate values, or a root solve that did not
// converge. Carries no verdict.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A root solve did not converge, so a membership/stability question cannot
// be answered.
class IndeterminateError : public NumericError {
 public:
  using NumericError::NumericError;
};

// Malformed input text or arguments (CLI, job files, complex literals).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace koebe
