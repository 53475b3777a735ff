#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace intblast {

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed concrete syntax. Line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class SortError : public Error {
public:
  using Error::Error;
};

/// A command or operator outside the supported QF_BV subset.
class UnsupportedError : public Error {
public:
  UnsupportedError(const std::string &symbol, const std::string &what)
      : Error("unsupported " + what + ": " + symbol), symbol_(symbol) {}

  const std::string &symbol() const { return symbol_; }

private:
  std::string symbol_;
};

class RecursionError : public Error {
public:
  using Error::Error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  using Error::Error;
};

class EmptyCoreError : public Error {
public:
  using Error::Error;
};

class IncompleteModelError : public Error {
public:
  using Error::Error;
};

/// Anything that went wrong while talking to an external solver.
class BackendError : public Error {
public:
  using Error::Error;
};

class SpawnError : public BackendError {
public:
  using BackendError::BackendError;
};

class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace intblast
