#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratpow {

// Precondition violations on analytic operations (empty words, out-of-range
// orders, guard limits). The message is the stable part of the contract.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input. `column` is 1-based; 0 when the whole input is at fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace ratpow
