#pragma once

#include <stdexcept>
#include <string>

namespace chaincert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown vertex, bad coefficient string, dangling name.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// Hypotheses of a construction are violated by otherwise well-formed input.
class PreconditionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace chaincert
