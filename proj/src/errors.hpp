#pragma once

#include <stdexcept>
#include <string>

namespace fliptop {

// Bad caller-supplied data: parameter out of range, size mismatch, parse failure.
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configurable resource guard tripped (group order, enumeration size, bit budget).
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fliptop
