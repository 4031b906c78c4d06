#pragma once

#include <stdexcept>
#include <string>

namespace curvforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, unparsable rational, bad JSON shape.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A family was evaluated on a vector outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Structural mismatch between objects that should agree (eigenvalue
/// multisets, scalar products, Clifford structure validation).
class StructureError : public Error {
 public:
  using Error::Error;
};

/// A computation required an exact rational answer that does not exist.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Should be unreachable for valid inputs; indicates a library bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace curvforge
