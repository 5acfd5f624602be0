#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyFunction : public Error {
 public:
  EmptyFunction() : Error("growth function must contain at least one term") {}
};

class InvalidTerm : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

class NonPositiveScalar : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class RateNotAllowed : public Error {
 public:
  using Error::Error;
};

class DegenerateDesign : public Error {
 public:
  using Error::Error;
};

class NoViableModel : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an expression or class notation. `offset` is the byte
/// position in the source text where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& expectation)
      : Error("parse error at offset " + std::to_string(offset) + ": " + expectation),
        offset_(offset),
        expectation_(expectation) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expectation() const noexcept { return expectation_; }

 private:
  std::size_t offset_;
  std::string expectation_;
};

/// Malformed CSV input. `line` is 1-based; 0 means the whole file.
class CsvError : public Error {
 public:
  CsvError(std::size_t line, const std::string& what)
      : Error(line == 0 ? "csv: " + what : "csv line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace rcx
