#pragma once

#include <stdexcept>
#include <string>

namespace selest {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller handed in data or parameters that violate an operation's precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Statistics lack the component (MCV or histogram) an estimate needs.
class InsufficientStatistics : public Error {
 public:
  InsufficientStatistics() : Error("insufficient statistics") {}
};

/// Malformed interchange document, column file or literal.
class FormatError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOperator : public Error {
 public:
  explicit UnsupportedOperator(const std::string& op) : Error("unsupported operator: " + op) {}
};

}  // namespace selest
