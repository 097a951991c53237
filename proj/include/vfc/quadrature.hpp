#pragma once

#include <functional>
#include <vector>

namespace vfc {

/// Gauss-Hermite rule for the physicists' weight:
///   integral e^(-t^2) f(t) dt  ~=  sum_i w_i f(t_i).
/// Nodes and weights come from Newton iteration on the orthonormal Hermite
/// recurrence, good to machine precision for the node counts used here.
struct GaussHermite {
  explicit GaussHermite(int n);

  std::vector<double> nodes;
  std::vector<double> weights;

  /// E[f(xi)] for xi ~ Normal(0, sigma^2).
  double gaussian_expectation(double sigma,
                              const std::function<double(double)>& f) const;

  /// Largest |offset| at which the rule evaluates its integrand for the
  /// given sigma; useful to keep evaluations inside a window.
  double max_offset(double sigma) const;
};

/// Gauss-Legendre rule on [-1,1], mapped to arbitrary segments. Serves as
/// the independent quadrature route when a discounted integral is checked
/// against a closed form.
struct GaussLegendre {
  explicit GaussLegendre(int n);

  std::vector<double> nodes;
  std::vector<double> weights;

  double integrate(double a, double b,
                   const std::function<double(double)>& f) const;

  /// Composite rule over `panels` equal subsegments of [a, b].
  double integrate_composite(double a, double b, int panels,
                             const std::function<double(double)>& f) const;
};

}  // namespace vfc
