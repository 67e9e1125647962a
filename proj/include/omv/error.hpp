#pragma once

#include <stdexcept>
#include <string>

namespace omv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (instance files, answer files, chain strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input that parses but violates the domain of the declared problem.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Operand sizes that do not agree with the preprocessed matrix.
class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Violation of the online query/answer protocol.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace omv
