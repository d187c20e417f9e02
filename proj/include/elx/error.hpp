#pragma once

#include <stdexcept>
#include <string>

namespace elx {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A substitution or valuation does not cover a variable of the expression.
class UnboundVariableError : public Error {
 public:
  explicit UnboundVariableError(std::string variable)
      : Error("unbound concept variable ?" + variable), variable_(std::move(variable)) {}

  const std::string& variable() const noexcept { return variable_; }

 private:
  std::string variable_;
};

/// An enumeration would exceed its configured state ceiling.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace elx
