#ifndef GROUPMIN_ERRORS_HPP
#define GROUPMIN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace groupmin {

// Base class for all library errors that are not plain precondition
// violations (those use std::invalid_argument).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Element enumeration exceeded the configured cap. The caller may retry
// with a larger cap or fall back to generator-only analysis.
class CapExceededError : public Error {
 public:
  explicit CapExceededError(const std::string& msg) : Error(msg) {}
};

// A brute-force sweep (subset enumeration, product size) exceeded its
// hard limit. Unlike CapExceededError this is about state-set sizes.
class LimitExceededError : public Error {
 public:
  explicit LimitExceededError(const std::string& msg) : Error(msg) {}
};

// Two routes that a theorem proves equivalent disagreed. This always
// indicates an implementation fault, never bad input.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& msg) : Error(msg) {}
};

// File-system level failure (missing or unwritable file).
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
 public:
  enum class Kind { Syntax, OutOfRange, Repeated, Semantic };

  ParseError(Kind kind, std::size_t line, const std::string& msg)
      : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

}  // namespace groupmin

#endif
