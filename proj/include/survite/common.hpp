#pragma once

#include <stdexcept>
#include <string>

namespace survite {

inline constexpr const char* kVersion = "0.1.0";

// Error taxonomy mirrored by the CLI exit codes:
// input/schema problems -> 2, numerical failures -> 3, bootstrap policy -> 4.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BootstrapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace survite
