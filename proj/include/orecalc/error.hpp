#pragma once

#include <stdexcept>
#include <string>

namespace orecalc {

/// Malformed or inconsistent input: bad descriptors, parse failures, arity
/// mismatches, arguments outside an operation's domain.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource bound was exceeded (codeword cap, search cap).
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orecalc
