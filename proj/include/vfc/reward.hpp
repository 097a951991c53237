#pragma once

#include <cmath>
#include <functional>
#include <variant>

#include "vfc/systems.hpp"

namespace vfc {

/// Reward modulus |r(x)-r(x')| <= C d(x,x').
struct LinearModulus {
  double C;
};

/// Reward modulus |r(x)-r(x')| <= R(d(x,x')) for a concave, monotonically
/// increasing R with R(0) = 0. Concavity is the caller's promise; it can be
/// spot-checked with check_concave_increasing below, not proven.
struct GeneralModulus {
  std::function<double(double)> R;
};

using ModulusKind = std::variant<LinearModulus, GeneralModulus>;

inline double apply_modulus(const ModulusKind& m, double d) {
  if (const auto* lin = std::get_if<LinearModulus>(&m)) return lin->C * d;
  return std::get<GeneralModulus>(m).R(d);
}

/// Samples R on (0, hi] and checks R(0)=0, monotonicity, and midpoint
/// concavity up to a small tolerance.
bool check_concave_increasing(const std::function<double(double)>& R, double hi,
                              int points = 256);

/// Bounded reward with a declared modulus.
struct RewardSpec {
  std::function<double(double)> r;
  double sup_abs;
  ModulusKind modulus;

  static RewardSpec identity(const MetricInterval& space) {
    return {[](double x) { return x; },
            std::max(std::abs(space.lo), std::abs(space.hi)),
            LinearModulus{1.0}};
  }

  static RewardSpec scaled_identity(double A, const MetricInterval& space) {
    return {[A](double x) { return A * x; },
            std::abs(A) * std::max(std::abs(space.lo), std::abs(space.hi)),
            LinearModulus{std::abs(A)}};
  }

  static RewardSpec constant(double c) {
    return {[c](double) { return c; }, std::abs(c), LinearModulus{0.0}};
  }
};

}  // namespace vfc
