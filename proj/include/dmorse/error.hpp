#pragma once

#include <stdexcept>
#include <string>

namespace dmorse {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input to a constructor: unknown label, duplicate label, cap exceeded.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// An element outside the ground set it was supposed to belong to.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input that violates its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An object would exceed a configured size cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Input file or stream could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dmorse
