#pragma once

#include <stdexcept>
#include <string>

namespace qqd {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonHermitianInput : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Matrix fails the Hermitian / unit-trace / PSD checks of a density matrix.
class InvalidState : public Error {
 public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class NegativeTime : public Error {
 public:
  using Error::Error;
};

class InvalidTrajectoryConfig : public Error {
 public:
  using Error::Error;
};

class InvalidDirection : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// A verification run exceeded one of its tolerances.
class ToleranceBreach : public Error {
 public:
  using Error::Error;
};

}  // namespace qqd
