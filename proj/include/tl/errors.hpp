#pragma once

#include <stdexcept>
#include <string>

namespace tl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero scalar") {}
};

/// Series expansion requested for a scalar whose denominator has no
/// invertible constant term.
class NotExpandable : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (index range, parity,
/// inadmissible sequence, malformed diagram).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Boundary point counts of two operands do not line up.
class BoundaryMismatch : public Error {
 public:
  using Error::Error;
};

class NotEigenvector : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tl
