#pragma once

#include <stdexcept>
#include <string>

namespace numrad {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (bad parameter, wrong operand set, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NotHermitian : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A scalar function was asked for a value outside its domain, or produced a
/// non-finite result on the requested spectrum.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative method (eigensolver, radius search) hit its iteration cap.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace numrad
