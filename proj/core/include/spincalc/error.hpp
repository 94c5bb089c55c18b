#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spincalc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-square determinant input, mismatched vector lengths.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Division by zero, malformed scalar text.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Operands living in different ring presets or Picard bases.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An internally re-derived quantity disagrees with its reference form.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace spincalc
