#pragma once

#include <stdexcept>

namespace smine {

// Error taxonomy used across the library.
//   std::invalid_argument — bad value-level inputs (out-of-range coordinates, wrong state kind)
//   InvalidConfig         — malformed MiningConfig / CLI configuration
//   InvalidRepository     — malformed service repository (duplicate names, invariant failures)
//   InvalidState          — illegal lead status transition

struct InvalidConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidRepository : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidState : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace smine
