#include "vfc/smoothing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vfc {

double SmoothedValueGrid::eval(double x) const {
  if (x <= lo()) return ws.front();
  if (x >= hi()) return ws.back();
  const double u = (x - lo()) / spacing();
  const auto i = static_cast<std::size_t>(u);
  if (i + 1 >= ws.size()) return ws.back();
  const double frac = u - static_cast<double>(i);
  return ws[i] + frac * (ws[i + 1] - ws[i]);
}

namespace {

// Precomputed interpolation target for one (grid node, quadrature node)
// pair; the mapped point never changes across iterations.
struct InterpStencil {
  std::size_t index;
  double frac;
};

double read(const std::vector<double>& ws, const InterpStencil& s) {
  return ws[s.index] + s.frac * (ws[s.index + 1] - ws[s.index]);
}

InterpStencil stencil_for(double x, double lo, double spacing, std::size_t n) {
  double u = (x - lo) / spacing;
  if (u <= 0.0) return {0, 0.0};
  if (u >= static_cast<double>(n - 1)) return {n - 2, 1.0};
  auto i = static_cast<std::size_t>(u);
  if (i > n - 2) i = n - 2;
  return {i, u - static_cast<double>(i)};
}

}  // namespace

SmoothedValueGrid solve_smoothed_value(const std::function<double(double)>& map,
                                       const RewardSpec& reward, double gamma,
                                       double sigma, double window_lo,
                                       double window_hi, int grid_points,
                                       int quad_nodes, double tol, int max_iter,
                                       std::vector<double>* change_log) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("solve_smoothed_value: requires gamma in (0,1)");
  if (!(sigma > 0.0)) throw std::invalid_argument("solve_smoothed_value: requires sigma > 0");
  if (quad_nodes < 8) throw std::invalid_argument("solve_smoothed_value: requires quad_nodes >= 8");
  if (grid_points < 2) throw std::invalid_argument("solve_smoothed_value: requires grid_points >= 2");
  if (!(window_hi > window_lo))
    throw std::invalid_argument("solve_smoothed_value: empty window");
  if (!(tol > 0.0)) throw std::invalid_argument("solve_smoothed_value: requires tol > 0");

  const auto n = static_cast<std::size_t>(grid_points);
  const double spacing = (window_hi - window_lo) / (grid_points - 1);
  const GaussHermite gh(quad_nodes);
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);

  SmoothedValueGrid grid;
  grid.sigma = sigma;
  grid.gamma = gamma;
  grid.xs.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    grid.xs[i] = window_lo + spacing * static_cast<double>(i);
  grid.xs.back() = window_hi;

  // Mapped quadrature points and their interpolation stencils are fixed.
  const auto q = static_cast<std::size_t>(quad_nodes);
  std::vector<InterpStencil> stencils(n * q);
  std::vector<double> rewards(n);
  for (std::size_t i = 0; i < n; ++i) {
    rewards[i] = reward.r(grid.xs[i]);
    for (std::size_t j = 0; j < q; ++j) {
      const double xi = std::numbers::sqrt2 * sigma * gh.nodes[j];
      stencils[i * q + j] = stencil_for(map(grid.xs[i] + xi), window_lo, spacing, n);
    }
  }

  auto apply = [&](const std::vector<double>& w, std::vector<double>& out) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < q; ++j)
        acc += gh.weights[j] * read(w, stencils[i * q + j]);
      out[i] = rewards[i] + gamma * inv_sqrt_pi * acc;
    }
  };

  std::vector<double> w(n, 0.0), next(n, 0.0);
  const double stop = tol * (1.0 - gamma) / gamma;
  int iter = 0;
  double change = 0.0;
  for (iter = 1; iter <= max_iter; ++iter) {
    apply(w, next);
    change = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      change = std::max(change, std::abs(next[i] - w[i]));
    if (change_log != nullptr) change_log->push_back(change);
    w.swap(next);
    if (change <= stop) break;
  }

  // Measured a-posteriori residual on the returned iterate.
  apply(w, next);
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    residual = std::max(residual, std::abs(next[i] - w[i]));

  if (iter > max_iter)
    throw std::runtime_error(
        "solve_smoothed_value: no convergence within max_iter, last residual " +
        std::to_string(residual));

  grid.ws = std::move(w);
  grid.iterations = iter;
  grid.residual = residual;
  return grid;
}

double gradient_smoothed(const SmoothedValueGrid& w,
                         const std::function<double(double)>& map,
                         const std::function<double(double)>& reward_derivative,
                         double x, int quad_nodes) {
  const GaussHermite gh(quad_nodes);
  const double margin = gh.max_offset(w.sigma);
  if (x - margin < w.lo() || x + margin > w.hi())
    throw std::domain_error(
        "gradient_smoothed: x too close to the window boundary for the quadrature");
  const double expectation = gh.gaussian_expectation(w.sigma, [&](double xi) {
    return w.eval(map(x + xi)) * xi;
  });
  return reward_derivative(x) +
         w.gamma / (w.sigma * w.sigma) * expectation;
}

double finite_difference(const SmoothedValueGrid& w, double x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite_difference: requires h > 0");
  if (x - h < w.lo() || x + h > w.hi())
    throw std::domain_error("finite_difference: stencil leaves the window");
  return (w.eval(x + h) - w.eval(x - h)) / (2.0 * h);
}

}  // namespace vfc
