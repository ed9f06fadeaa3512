#pragma once

#include <stdexcept>

namespace mtt {

// A validated structural invariant (symmetry, zero sums, cofactor
// agreement) failed to hold.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration or expansion was requested beyond its configured cap.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mtt
