#pragma once

#include <stdexcept>
#include <string>

namespace overlap {

// Raised when an input file or text blob does not parse.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a stated precondition of an operation does not hold.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a construction produced output that fails its own
// verification, or an internal case analysis was violated.
struct internal_error : std::runtime_error {
  explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace overlap
