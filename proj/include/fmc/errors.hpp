#pragma once

#include <stdexcept>
#include <string>

namespace fmc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exact division left a remainder. Always an internal bug or a bad input
/// dimension, never a rounding issue.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// Nest enumeration was asked for more labels than the configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A space descriptor lacks the table for a required power X^m.
class MissingTable : public Error {
 public:
  using Error::Error;
};

/// Malformed space descriptor document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fmc
