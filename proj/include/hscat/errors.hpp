#pragma once

#include <stdexcept>
#include <string>

namespace hscat {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A constructor or operation argument is outside its documented range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Two objects that must share a grid / model / convention do not.
class IncompatibilityError : public Error {
 public:
  using Error::Error;
};

/// An evaluation point or argument lies outside the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition on the input data is violated
/// (e.g. nonzero samples where exact support is required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed its numerical quality certificate.
/// Carries the measured quantities in the message.
class NumericalQualityError : public Error {
 public:
  using Error::Error;
};

/// A functional was paired with a state lacking the required
/// membership tag or analytic certificate.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver failed to converge; message carries the trace.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// A root search converged to a point that is not a resonance.
class NotAResonanceError : public Error {
 public:
  using Error::Error;
};

/// A report object no longer matches the model it was derived from.
class StaleReportError : public Error {
 public:
  using Error::Error;
};

/// Input data is malformed or insufficient (fits, sample lists).
class DataError : public Error {
 public:
  using Error::Error;
};

/// An experiment is missing required configuration.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// A report could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hscat
