#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mixsing {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed polynomial text. position() is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Input that is well-formed but outside the supported class.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace mixsing
