#pragma once

#include <functional>
#include <vector>

#include "vfc/quadrature.hpp"
#include "vfc/reward.hpp"

namespace vfc {

/// The value function w of a disturbed system, solved on a uniform grid.
/// w satisfies w(x) = r(x) + gamma E[w(Phi(x + xi))], xi ~ N(0, sigma^2);
/// between grid nodes it is read by linear interpolation, beyond the window
/// by constant extrapolation.
struct SmoothedValueGrid {
  std::vector<double> xs;
  std::vector<double> ws;
  double sigma;
  double gamma;
  int iterations;
  double residual;  // measured sup |w - (r + gamma E[w o Phi])| on the grid

  double lo() const { return xs.front(); }
  double hi() const { return xs.back(); }
  double spacing() const { return (hi() - lo()) / (static_cast<double>(xs.size()) - 1.0); }
  double eval(double x) const;
};

/// Solves the fixed-point equation for w by value iteration with
/// Gauss-Hermite quadrature over the disturbance. `map` must embed its own
/// projection (e.g. clamp to [0,1] before the logistic map), so integrand
/// evaluations never leave the window. Stops once successive iterates are
/// within tol (1-gamma)/gamma in sup norm, which certifies residual <= tol
/// by the contraction property; the returned residual is measured, not
/// inferred. Throws on non-convergence within max_iter.
SmoothedValueGrid solve_smoothed_value(const std::function<double(double)>& map,
                                       const RewardSpec& reward, double gamma,
                                       double sigma, double window_lo,
                                       double window_hi, int grid_points,
                                       int quad_nodes, double tol, int max_iter,
                                       std::vector<double>* change_log = nullptr);

/// Gradient of the disturbed value function at x:
///   w'(x) = r'(x) + (gamma / sigma^2) E[w(Phi(x + xi)) xi].
/// x must be far enough from the window edges that every quadrature
/// evaluation point x + offset stays inside.
double gradient_smoothed(const SmoothedValueGrid& w,
                         const std::function<double(double)>& map,
                         const std::function<double(double)>& reward_derivative,
                         double x, int quad_nodes);

/// Centered difference (w(x+h) - w(x-h))/(2h) on the solved grid.
double finite_difference(const SmoothedValueGrid& w, double x, double h);

}  // namespace vfc
