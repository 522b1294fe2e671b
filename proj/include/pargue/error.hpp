#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pargue {

/// Malformed or inconsistent user input (unknown ids, out-of-range values).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text that could not be parsed; carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The request exceeds the enumeration limits of the engine.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A circuit lacks a structural property required by the operation.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pargue
