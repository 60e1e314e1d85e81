#pragma once

#include <stdexcept>
#include <string>

namespace ikeda {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input or unsupported configuration (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An internal identity that must hold exactly did not (CLI exit code 3).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A requested value lies outside a precomputed table or a feasibility guard.
class BoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace ikeda
