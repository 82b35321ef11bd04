#pragma once

#include <stdexcept>
#include <string>

namespace subsum {

// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An operation was called with arguments that violate its contract.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// The request is well formed but exceeds a configured resource bound.
// The message names the bound that was hit.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace subsum
