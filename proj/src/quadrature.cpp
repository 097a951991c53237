#include "vfc/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vfc {

GaussHermite::GaussHermite(int n) {
  if (n < 1) throw std::invalid_argument("GaussHermite: requires n >= 1");
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);

  const double pi_m4 = 1.0 / std::pow(std::numbers::pi, 0.25);
  const int half = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < half; ++i) {
    // Initial guesses, largest root first.
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * nodes[1];
    } else {
      z = 2.0 * z - nodes[static_cast<std::size_t>(i) - 2];
    }
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pi_m4;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    nodes[static_cast<std::size_t>(i)] = z;
    nodes[static_cast<std::size_t>(n) - 1 - i] = -z;
    weights[static_cast<std::size_t>(i)] = 2.0 / (pp * pp);
    weights[static_cast<std::size_t>(n) - 1 - i] = weights[static_cast<std::size_t>(i)];
  }
}

double GaussHermite::gaussian_expectation(
    double sigma, const std::function<double(double)>& f) const {
  const double scale = std::numbers::sqrt2 * sigma;
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    acc += weights[i] * f(scale * nodes[i]);
  return acc / std::sqrt(std::numbers::pi);
}

double GaussHermite::max_offset(double sigma) const {
  return std::numbers::sqrt2 * sigma * std::abs(nodes.front());
}

GaussLegendre::GaussLegendre(int n) {
  if (n < 2) throw std::invalid_argument("GaussLegendre: requires n >= 2");
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = -z;
    nodes[static_cast<std::size_t>(n) - 1 - i] = z;
    weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
    weights[static_cast<std::size_t>(n) - 1 - i] = weights[static_cast<std::size_t>(i)];
  }
}

double GaussLegendre::integrate(double a, double b,
                                const std::function<double(double)>& f) const {
  const double mid = 0.5 * (a + b);
  const double len = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    acc += weights[i] * f(mid + len * nodes[i]);
  return acc * len;
}

double GaussLegendre::integrate_composite(
    double a, double b, int panels, const std::function<double(double)>& f) const {
  if (panels < 1) throw std::invalid_argument("GaussLegendre: requires panels >= 1");
  double acc = 0.0;
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p)
    acc += integrate(a + p * width, a + (p + 1) * width, f);
  return acc;
}

}  // namespace vfc
