#pragma once

#include <stdexcept>
#include <string>

namespace unilat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: unsupported rank, odd degree, order too small, unknown name.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Shape mismatch between matrices or polynomial variables.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Operation undefined for the zero polynomial (content, roots, Sturm count).
class UndefinedError : public Error {
 public:
  using Error::Error;
};

/// Consistent linear system whose solution is not unique.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed (verified data did not check out).
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace unilat
