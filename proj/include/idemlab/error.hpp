#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace idemlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed one of the configured size caps.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The homomorphism search ran out of its extension budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input: a group-definition file, a table that is not a group,
/// a map that is not a homomorphism.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A check that the mathematics guarantees has failed; always an
/// implementation bug, never a property of the input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace idemlab
