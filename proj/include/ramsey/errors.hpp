#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed DSL text. `position` is a 0-based byte offset into the source.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// A structure or threshold function violating a stated invariant.
struct ValidationError : Error {
  using Error::Error;
};

// 64-bit arithmetic capacity exceeded during exact evaluation.
struct CapacityError : Error {
  using Error::Error;
};

// Malformed input file. `line` is 1-based.
struct IoError : Error {
  IoError(const std::string& msg, std::size_t line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  std::size_t line;
};

// An operation invoked outside its stated domain.
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace ramsey
