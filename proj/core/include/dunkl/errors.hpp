#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Base class for recoverable library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input vectors do not form a root system (or group closure blew the cap).
class NotARootSystem : public Error {
 public:
  using Error::Error;
};

/// The requested operation is only defined for a narrower class of inputs
/// (e.g. integer multiplicities, product reflection groups).
class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// Numeric failure with an attached residual estimate.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dunkl
