#pragma once

#include <stdexcept>
#include <string>

namespace quandles {

// A breadth-first closure or an enumeration exceeded its configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A consistency check that is guaranteed by construction failed. Seeing this
// exception indicates a bug in this library, never bad user input.
class InternalCheckError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An input document could not be parsed into the expected shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void internal_check(bool ok, const std::string& message) {
  if (!ok) throw InternalCheckError(message);
}

}  // namespace quandles
