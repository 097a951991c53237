#include "vfc/modulus.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

#include "vfc/value.hpp"

namespace vfc {

ModulusCurve empirical_modulus(const GridFunction& f,
                               std::span<const double> d0_grid) {
  const std::size_t n = f.xs.size();
  if (n < 2 || f.ys.size() != n)
    throw std::invalid_argument("empirical_modulus: need a grid of at least 2 points");
  if (d0_grid.empty()) throw std::invalid_argument("empirical_modulus: empty d0 grid");
  for (std::size_t i = 0; i < n; ++i) {
    if (!f.space.contains(f.xs[i]))
      throw std::invalid_argument("empirical_modulus: grid point outside the space");
    if (i > 0 && !(f.xs[i] > f.xs[i - 1]))
      throw std::invalid_argument("empirical_modulus: xs not strictly increasing");
  }
  const double D = f.space.diameter();
  for (std::size_t k = 0; k < d0_grid.size(); ++k) {
    if (!(d0_grid[k] > 0.0) || d0_grid[k] > D * (1.0 + 1e-12))
      throw std::invalid_argument("empirical_modulus: d0 outside (0, D]");
    if (k > 0 && !(d0_grid[k] > d0_grid[k - 1]))
      throw std::invalid_argument("empirical_modulus: d0 grid not increasing");
  }

  ModulusCurve curve{CurveKind::EmpiricalModulus, {d0_grid.begin(), d0_grid.end()}, {}};
  curve.value.resize(d0_grid.size());

  // Any pair at distance <= d0 lies inside some window of width d0, and the
  // extremes of a window are themselves such a pair, so the supremum equals
  // the largest (max - min) over windows. Monotone deques track both.
  for (std::size_t k = 0; k < d0_grid.size(); ++k) {
    const double d0 = d0_grid[k];
    std::deque<std::size_t> maxq, minq;
    std::size_t lo = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      while (!maxq.empty() && f.ys[maxq.back()] <= f.ys[i]) maxq.pop_back();
      maxq.push_back(i);
      while (!minq.empty() && f.ys[minq.back()] >= f.ys[i]) minq.pop_back();
      minq.push_back(i);
      while (f.xs[i] - f.xs[lo] > d0) {
        if (maxq.front() == lo) maxq.pop_front();
        if (minq.front() == lo) minq.pop_front();
        ++lo;
      }
      best = std::max(best, f.ys[maxq.front()] - f.ys[minq.front()]);
    }
    curve.value[k] = best;
  }
  return curve;
}

double modulus_power_example(double L, double gamma, double d0, double eps) {
  if (d0 < 0.0 || d0 > 1.0)
    throw std::domain_error("modulus_power_example: d0 outside [0,1]");
  if (d0 == 0.0) return 0.0;
  return value_power_closed_series(L, gamma, 1.0, eps) -
         value_power_closed_series(L, gamma, 1.0 - d0, eps);
}

HolderFit holder_exponent_fit(const ModulusCurve& curve, double lo, double hi) {
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (curve.d0[i] >= lo && curve.d0[i] <= hi && curve.value[i] > 0.0) {
      lx.push_back(std::log(curve.d0[i]));
      ly.push_back(std::log(curve.value[i]));
    }
  }
  const std::size_t m = lx.size();
  if (m < 5)
    throw std::invalid_argument("holder_exponent_fit: fewer than 5 usable points in range");

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = ly[i] - (slope * lx[i] + intercept);
    ss_res += r * r;
  }
  const double r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return {slope, std::exp(intercept), r2};
}

std::vector<std::pair<double, double>> difference_quotient_profile(
    const std::function<double(double)>& f, std::span<const double> xs,
    std::span<const double> hs) {
  std::vector<std::pair<double, double>> profile;
  profile.reserve(hs.size());
  std::vector<double> fx(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) fx[i] = f(xs[i]);
  for (double h : hs) {
    if (!(h > 0.0))
      throw std::invalid_argument("difference_quotient_profile: requires h > 0");
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      worst = std::max(worst, std::abs(f(xs[i] + h) - fx[i]) / h);
    profile.emplace_back(h, worst);
  }
  return profile;
}

}  // namespace vfc
