#pragma once

#include <stdexcept>
#include <string>

namespace facstat {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomials over different formal variables were combined.
class TagMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed argument: bad characteristic, degree mismatch, unparsable text.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured polynomial budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A rational function cannot be expanded as a power series at u = 0.
class NonExpandableError : public Error {
 public:
  using Error::Error;
};

/// A stable-limit coefficient did not settle before the degree cap.
class NotStabilizedError : public Error {
 public:
  NotStabilizedError(const std::string& what, int coefficient)
      : Error(what), coefficient_(coefficient) {}
  int coefficient() const noexcept { return coefficient_; }

 private:
  int coefficient_;
};

/// A proven identity failed to hold. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace facstat
