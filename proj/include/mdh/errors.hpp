#pragma once

#include <stdexcept>
#include <string>

namespace mdh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid input data (parse failures, validation failures).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (b < 1, negative degree, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation was invoked on an object that does not satisfy its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Case tables that leave a gap or overlap on the resolution axis.
class CoverageError : public Error {
 public:
  using Error::Error;
};

/// A rank profile operation would produce a negative rank.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent request, e.g. an edge split whose labels do not restore the original.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Degenerate structure (isolated vertices).
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a configured size bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Construction not supported for the requested size.
class UnsupportedSizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace mdh
