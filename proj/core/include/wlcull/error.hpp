#pragma once

#include <stdexcept>
#include <string>

namespace wlcull {

// Base class for all toolkit errors. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (bad CSV, missing event, unknown metric).
// CLI exit code 2.
class DataError : public Error {
public:
  using Error::Error;
};

// Expression syntax error; carries the byte offset of the offending token.
class ParseError : public DataError {
public:
  ParseError(const std::string& message, std::size_t offset)
      : DataError(message + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// Numerical failure (eigensolver non-convergence and the like). CLI exit code 3.
class NumericError : public Error {
public:
  using Error::Error;
};

}  // namespace wlcull
