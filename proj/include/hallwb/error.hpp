#pragma once

#include <stdexcept>
#include <string>

namespace hallwb {

// Base of every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (bad DSL, bad JSON, mismatched quivers).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(int line, int column, const std::string& message)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

// Operands live over different quivers or fields.
class MismatchError : public InputError {
 public:
  using InputError::InputError;
};

// The operation is not defined for this category (e.g. Loewy data of a
// non-nilpotent representation of a cyclic quiver).
class UnsupportedError : public InputError {
 public:
  using InputError::InputError;
};

// An enumeration or exhaustive scan would exceed the configured cap.
// Never converted into a guess.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace hallwb
