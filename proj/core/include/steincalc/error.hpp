#pragma once

#include <stdexcept>
#include <string>

namespace steincalc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vectors or words that do not live on the same surface.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input lacks data an operation needs (hole sets, rotations, meridians).
class UnsupportedInput : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Two twists could not be certified to commute.
class IndeterminateCommutation : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// No certified embedding was found. This is not a proof of absence.
class NotApplicable : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A non-planar signature was requested without a baseline.
class RelativeUnavailable : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Signatures in different modes (exact vs. relative to different baselines).
class IncomparableModes : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Integer arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. `location` is a JSON pointer or "line:column".
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& message)
      : Error(location.empty() ? message : location + ": " + message),
        location_(std::move(location)),
        message_(message) {}

  const std::string& location() const noexcept { return location_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string location_;
  std::string message_;
};

}  // namespace steincalc
