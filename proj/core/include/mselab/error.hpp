#pragma once

#include <stdexcept>
#include <string>

namespace mselab {

// Structural problem with a graph: malformed rotation, dangling id, loop.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of a construction or pipeline stage does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text or JSON could not be parsed. `line` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An exact solver refused to run because the instance exceeds its caps.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mselab
