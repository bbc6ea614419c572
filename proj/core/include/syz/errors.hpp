#pragma once

#include <stdexcept>
#include <string>

namespace syz {

/// Thrown when a computation would exceed a configured resource cap
/// (e.g. the divisor-closure element limit). Maps to CLI exit code 4.
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when input violates a mathematical hypothesis of the requested
/// operation (not a malformed-input error): e.g. asking for a semistability
/// verdict on a set that has basepoints, or running a verification below its
/// validity threshold. Maps to CLI exit code 3.
class HypothesisError : public std::runtime_error {
public:
  explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace syz
