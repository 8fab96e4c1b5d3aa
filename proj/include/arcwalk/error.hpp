#pragma once

#include <stdexcept>
#include <string>

namespace arcwalk {

/// Base of all library errors. The CLI maps each subclass to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or configuration (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed or unsupported input data (exit code 3).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver failure or a violated numerical contract (exit code 4).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace arcwalk
