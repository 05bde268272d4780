#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epslab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in polynomial rings with different numbers of variables.
class ArityMismatchError : public Error {
public:
  using Error::Error;
};

/// Operands belong to different quotient rings.
class RingMismatchError : public Error {
public:
  using Error::Error;
};

/// An exponent arithmetic step would leave the machine-width range.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// Precondition violation (bad index, out-of-range parameter, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Krull dimension of the zero ring requested (unit ideal input).
class ZeroRingError : public Error {
public:
  using Error::Error;
};

/// A length was requested for a quotient that is not of finite length.
class InfiniteLengthError : public Error {
public:
  using Error::Error;
};

/// length_quotient(B, A) requires B to be contained in A.
class ContainmentError : public Error {
public:
  using Error::Error;
};

/// The nilradical has maximal dimension, so the limit theorems do not apply.
class HypothesisViolationError : public Error {
public:
  using Error::Error;
};

/// Text or file input could not be parsed; carries a 1-based position.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        raw_(message),
        line_(line),
        column_(column) {}

  const std::string& raw_message() const { return raw_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::string raw_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace epslab
