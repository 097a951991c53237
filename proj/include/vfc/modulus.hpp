#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "vfc/bounds.hpp"
#include "vfc/systems.hpp"

namespace vfc {

/// Function sampled on a strictly increasing grid inside its space.
struct GridFunction {
  std::vector<double> xs;
  std::vector<double> ys;
  MetricInterval space;
};

/// Empirical modulus of continuity: for each threshold d0, the largest
/// |f(x)-f(x')| over sampled pairs with |x-x'| <= d0. Exploits the 1-D
/// ordering with a sliding-window max/min sweep, O(n) per threshold, so
/// the result is exact over all pairs of grid points. Always a lower bound
/// for the true modulus.
ModulusCurve empirical_modulus(const GridFunction& f,
                               std::span<const double> d0_grid);

/// Closed-form modulus of the x^L example: W(d0) = v(1) - v(1-d0), with the
/// two values evaluated by the truncated power series at accuracy eps.
double modulus_power_example(double L, double gamma, double d0, double eps);

struct HolderFit {
  double beta_hat;
  double A_hat;
  double r2;
};

/// Least-squares fit of ln W = beta ln d0 + ln A over curve points with
/// positive value and d0 inside [lo, hi]. Needs at least 5 usable points.
HolderFit holder_exponent_fit(const ModulusCurve& curve, double lo, double hi);

/// For each step h (given largest first), the maximum one-sided difference
/// quotient |f(x+h)-f(x)|/h over the probe states. Growth as h shrinks is a
/// roughness diagnostic; it never proves non-differentiability.
std::vector<std::pair<double, double>> difference_quotient_profile(
    const std::function<double(double)>& f, std::span<const double> xs,
    std::span<const double> hs);

}  // namespace vfc
