#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace vfc {

/// Pairwise summation; order is fixed, so results are reproducible
/// regardless of how the inputs were produced.
inline double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 16) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

inline std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    xs[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  xs.back() = hi;
  return xs;
}

inline std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    xs[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (n - 1));
  xs.back() = hi;
  return xs;
}

}  // namespace vfc
