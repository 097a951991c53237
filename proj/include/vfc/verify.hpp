#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vfc/reward.hpp"
#include "vfc/systems.hpp"

namespace vfc {

/// One checked property: pass iff `observed relation threshold`.
struct PropertyResult {
  std::string id;
  double observed;
  std::string relation;  // "<=" or ">="
  double threshold;
  bool pass;
};

struct VerifyReport {
  std::vector<PropertyResult> results;

  bool all_pass() const;
  /// CSV with header property,observed,relation,threshold,pass; byte-stable
  /// for a fixed seed.
  std::string to_csv() const;
};

struct VerifyConfig {
  std::uint64_t seed = 2024;
  int le_samples = 4000;
  int noisy_value_samples = 2000;
  int noisy_value_points = 161;
};

/// Runs the invariant and property suites of every module and reports one
/// line per property.
VerifyReport run_verify(const VerifyConfig& config);

/// Discounted integral of the floor-lifted system along one simulated path,
/// by per-unit-segment Gauss-Legendre quadrature, together with the plain
/// discrete discounted sum over the same path. The quadrature is the
/// independent route to the (1-gamma)/ln(1/gamma) factor.
std::pair<double, double> floor_lift_path_pair(const System& system,
                                               const RewardSpec& reward,
                                               double gamma, double x,
                                               int segments, RngStream& rng);

}  // namespace vfc
