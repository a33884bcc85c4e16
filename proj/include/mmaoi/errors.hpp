#pragma once

#include <stdexcept>
#include <string>

namespace mmaoi {

/// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed surface file (bad header, bad row, duplicate cell, unreadable file).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A surface file leaves at least one lattice cell unset.
class HoleError : public Error {
 public:
  using Error::Error;
};

/// NaN or infinite loss value.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Strict-mode query outside the stored grid.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// Invalid generator spec or generator parameters.
class BadSpec : public Error {
 public:
  using Error::Error;
};

/// Invalid system configuration or policy.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// g(beta) did not change sign over the (expanded) bracket.
class BracketError : public Error {
 public:
  using Error::Error;
};

}  // namespace mmaoi
