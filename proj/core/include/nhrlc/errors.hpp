#pragma once

#include <stdexcept>
#include <string>

namespace nhrlc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class NotPositiveHermitian : public Error {
 public:
  using Error::Error;
};

/// Raised by operations that need a diagonalizable H when alpha == omega0.
class ExceptionalPointError : public Error {
 public:
  using Error::Error;
};

class NotExceptionalError : public Error {
 public:
  using Error::Error;
};

/// (a - b) * gamma != 1: no pseudo-fermion pair exists.
class ExistenceViolation : public Error {
 public:
  using Error::Error;
};

class PhaseUnsupported : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace nhrlc
