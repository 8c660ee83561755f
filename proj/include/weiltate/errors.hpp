#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weiltate {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a documented precondition or mathematical hypothesis
/// (non-prime modulus, odd g where even is required, invalid CM-type, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A configurable size cap was exceeded (group order, subset dimension,
/// enumeration output, retry budget).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised by the real-root counter when gcd(f, f') is not constant.
class NotSquarefree : public Error {
 public:
  using Error::Error;
};

/// Malformed scenario file or structured document.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message)
      : Error(format(line, field, message)), line_(line), field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  static std::string format(std::size_t line, const std::string& field,
                            const std::string& message) {
    std::string out = "line " + std::to_string(line);
    if (!field.empty()) out += ", field '" + field + "'";
    return out + ": " + message;
  }

  std::size_t line_;
  std::string field_;
};

}  // namespace weiltate
