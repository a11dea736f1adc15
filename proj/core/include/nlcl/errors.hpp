#pragma once

#include <stdexcept>
#include <string>

namespace nlcl {

/// Base class of all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad configuration or datum supplied by the caller (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

class InvalidGrid : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class InvalidDatum : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class InvalidKernel : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class NonMonotoneVelocity : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class ValidationError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Config file could not be parsed; carries a 1-based line number.
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& what, int line)
      : ConfigError(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class KernelUnderResolved : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class GridMismatch : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class IncompatibleFactor : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

class InsufficientTrajectoryResolution : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// A runtime invariant broke during a simulation (CLI exit code 3).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class CflViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class MaxPrincipleViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

/// Filesystem failure (CLI exit code 4).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace nlcl
