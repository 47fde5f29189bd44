#pragma once

// Mining configuration: recognition weights, similarity weights,
// interestingness weights, the two filter thresholds, and the zero-similarity
// domain-correlation anchor r0.

#include <array>
#include <cmath>
#include <string>

#include "smine/errors.hpp"

namespace smine {

/// lambda0 such that exp(-1/lambda0) == r0. Valid for r0 in (0, 1).
inline double lambda_from_r0(double r0) {
  if (!(r0 > 0.0) || !(r0 < 1.0))
    throw std::invalid_argument("r0 must lie strictly inside (0, 1)");
  return -1.0 / std::log(r0);
}

struct MiningConfig {
  // correlation-degree weights over (state, env, people, ope); sum to 1
  std::array<double, 4> eta{0.1, 0.2, 0.3, 0.4};
  // similarity weights over (pre, post, inputs, outputs); sum to 1
  std::array<double, 4> sim_weights{0.25, 0.25, 0.25, 0.25};
  // interestingness weights over (actionability, novelty, diversity); sum to 1
  std::array<double, 3> int_weights{0.3, 0.3, 0.4};
  double zeta = 0.5;  // minimum correlation degree, [0, 1]
  double xi = 0.7;    // minimum interestingness, [0, 1]
  double r0 = 0.1;    // domain correlation at zero similarity, (0, 1)
  bool ignore_spatial = false;  // drop the spatial clause of state dependency

  bool operator==(const MiningConfig&) const = default;

  /// Derived, never stored: -1/ln(r0).
  double lambda0() const { return lambda_from_r0(r0); }

  /// Throws InvalidConfig naming the offending field.
  void validate() const {
    auto check_weights = [](const auto& w, const std::string& field) {
      double sum = 0.0;
      for (double x : w) {
        if (!(x >= 0.0)) throw InvalidConfig(field + " entries must be >= 0");
        sum += x;
      }
      if (std::abs(sum - 1.0) > 1e-9)
        throw InvalidConfig(field + " must sum to 1");
    };
    check_weights(eta, "eta");
    check_weights(sim_weights, "sim_weights");
    check_weights(int_weights, "int_weights");
    if (!(zeta >= 0.0 && zeta <= 1.0)) throw InvalidConfig("zeta must lie in [0, 1]");
    if (!(xi >= 0.0 && xi <= 1.0)) throw InvalidConfig("xi must lie in [0, 1]");
    if (!(r0 > 0.0) || !(r0 < 1.0)) throw InvalidConfig("r0 must lie strictly inside (0, 1)");
  }
};

}  // namespace smine
