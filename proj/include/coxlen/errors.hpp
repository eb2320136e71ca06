#pragma once

#include <stdexcept>
#include <string>

namespace coxlen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input or an input that violates a documented invariant.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition (e.g. a non-elliptic
/// element passed where an elliptic one is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Valid request outside the supported families, ranks or modes.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A configurable search or enumeration cap was hit before an answer was found.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal self-check failed. Seeing one of these is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace coxlen
