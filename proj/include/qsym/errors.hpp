#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical domain of an operation was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Division by the zero rational or the zero rational function.
class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A rational function was evaluated at one of its poles.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The weighted closed form was requested at a parameter point where one of
/// its factors m/[m]_q has m = 0.
class DegeneracyError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A configured size guard (exponent span, grid size, sweep bounds) would be
/// exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsym
