#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctc {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed expression text. position() is a 0-based byte offset into the
// input string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Violated precondition: zero input, roster mismatch, out-of-domain argument.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace ctc
