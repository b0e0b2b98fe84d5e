#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace detring {

// Bad input: parameters out of range, mismatched spaces, unparsable text.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SpaceMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ValidationError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A monomial that is not the initial monomial of any standard bitableau.
class DecodeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A self-check failed: two independent routes disagreed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace detring
