#pragma once

#include <stdexcept>
#include <string>

namespace cotilt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or foreign input: wrong ring, unknown prime, bad JSON shape.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A ring descriptor that lacks data an operation needs (e.g. Bass data).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The operation is well defined mathematically but outside what we model.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on data violating its documented precondition.
/// Subclasses carry the violation report.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cotilt
