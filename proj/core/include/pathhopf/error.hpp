#pragma once

#include <stdexcept>
#include <string>

namespace pathhopf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph document, invalid literal, or otherwise bad input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Graph fails one of the structural requirements (symmetric, simple, 0/1, connected).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An iterative method did not reach its tolerance within the iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Tridiagonal system with (numerically) vanishing determinant.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// Requested path length exceeds the configured cutoff.
class CutoffError : public Error {
 public:
  using Error::Error;
};

}  // namespace pathhopf
