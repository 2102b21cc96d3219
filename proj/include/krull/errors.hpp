#pragma once

#include <stdexcept>
#include <string>

namespace krull {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad poset data, names that do not resolve, syntax errors.
struct input_error : error {
  using error::error;
};

// Text input rejected by a parser; carries a position for diagnostics.
struct parse_error : input_error {
  int line = 0;
  int column = 0;
  std::string code;  // stable machine-readable identifier, e.g. "expected_token"

  parse_error(const std::string& msg, int ln, int col, std::string c)
      : input_error(msg + " (line " + std::to_string(ln) + ", column " +
                    std::to_string(col) + ")"),
        line(ln),
        column(col),
        code(std::move(c)) {}
};

// A configured size or search budget was exceeded. Never a wrong answer:
// callers either raise the cap or treat the computation as unavailable.
struct resource_error : error {
  using error::error;
};

// An API precondition was violated by the caller.
struct contract_error : error {
  using error::error;
};

}  // namespace krull
