#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace conway {

// Internal point index, always 0-based. All text I/O is 1-based.
using Point = std::uint16_t;

// Raised for domain-level failures: malformed designs, non-collinear moves,
// degree mismatches, caps exceeded.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line_number, const std::string& what)
      : Error("line " + std::to_string(line_number) + ": " + what),
        line_number_(line_number) {}

  std::size_t line_number() const noexcept { return line_number_; }

 private:
  std::size_t line_number_;
};

}  // namespace conway
