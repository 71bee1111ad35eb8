#pragma once

#include <stdexcept>
#include <string>

namespace rainbowlab {

// Raised when an operation is asked to run beyond its documented size guard.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed graph/tree/report input, with positional context where
// available ("line 3: ...", "edges[2]: ...").
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rainbowlab
