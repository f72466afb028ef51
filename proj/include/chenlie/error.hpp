#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chenlie {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two operands were built over different alphabets.
class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("alphabet mismatch") {}
  explicit AlphabetMismatch(const std::string& what) : Error("alphabet mismatch: " + what) {}
};

// An operation was called outside its domain (bad degree, zero divisor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace chenlie
