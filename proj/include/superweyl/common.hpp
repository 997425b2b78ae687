#pragma once

#include <stdexcept>
#include <string>

namespace superweyl {

// Violation of an internal invariant: a bug in this library, never bad input.
// CLI maps this to exit code 3, bad input (std::invalid_argument) to exit 2.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail_internal(const std::string& msg) {
  throw internal_error(msg);
}

[[noreturn]] inline void fail_input(const std::string& msg) {
  throw std::invalid_argument(msg);
}

inline void check_internal(bool ok, const std::string& msg) {
  if (!ok) fail_internal(msg);
}

inline void check_input(bool ok, const std::string& msg) {
  if (!ok) fail_input(msg);
}

}  // namespace superweyl
