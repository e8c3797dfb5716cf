#pragma once

#include <stdexcept>
#include <string>

namespace nonrep {

// Malformed input text (edge lists, graph6, PACE .td, structure JSON).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), line_(0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A configured size or budget was exceeded (exact oracles, product size).
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nonrep
