#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vfc/modulus.hpp"
#include "vfc/smoothing.hpp"
#include "vfc/systems.hpp"
#include "vfc/value.hpp"

namespace vfc {

/// Value function of the x^L example sampled on a uniform grid of [0,1].
GridFunction sample_power_value(double L, double gamma, int points, double eps);

/// Value function of the (deterministic) logistic system sampled on [0,1].
GridFunction sample_logistic_value(double gamma, int points, double eps);

/// Closed-form value of the clipped-linear system sampled on [0, D].
GridFunction sample_clipped_linear_value(double A, double L, double gamma,
                                         double D, int points);

/// Monte Carlo value grid of the noisy logistic system; common random
/// numbers across grid points. Returns the grid plus the largest standard
/// error of any point estimate.
struct NoisyValueGrid {
  GridFunction values;
  double max_standard_error;
};
NoisyValueGrid sample_noisy_logistic_value(double gamma, double sigma,
                                           int points, int samples, double eps,
                                           RngStream& rng);

struct Figure1Config {
  double gamma = 0.8;
  double sigma = 0.01;
  int grid_points = 4001;
  double tol = 1e-8;
  int quad_nodes = 64;
  double window_lo = -0.2;
  double window_hi = 1.2;
  double eps = 1e-10;  // truncation for the undisturbed value
};

struct Figure1Result {
  std::string csv;
  SmoothedValueGrid smoothed;
};

/// Undisturbed logistic value v next to the Gaussian-disturbed value w with
/// both forms of its derivative; one CSV row per solver grid node in [0,1].
Figure1Result run_figure1(const Figure1Config& config);

struct Figure2Config {
  double L = 1.5;
  std::vector<double> gammas = {0.5, 0.9, 0.99};
  int value_points = 2000;
  int d0_points = 100;
  double d0_lo = 1e-4;
  double d0_hi = 1.0;
  double eps = 1e-10;
};

struct Figure2Result {
  std::string left_csv;   // normalized value functions over x
  std::string right_csv;  // empirical moduli and discrete-time bounds over d0
};

Figure2Result run_figure2(const Figure2Config& config);

struct BoundsTableConfig {
  double L = 1.5;
  double gamma = 0.9;
  double D = 1.0;
  double C = 1.0;
  TimeDomain time_domain = TimeDomain::Discrete;
  std::optional<double> beta_choice;  // required in the L = 1/gamma case
  int d0_points = 100;
  double d0_lo = 1e-4;
};

std::string bounds_table(const BoundsTableConfig& config);

struct ModulusTableConfig {
  double L = 1.5;
  double gamma = 0.9;
  int grid_points = 2000;
  int d0_points = 100;
  double d0_lo = 1e-4;
  double d0_hi = 1.0;
  double eps = 1e-10;
};

std::string modulus_table(const ModulusTableConfig& config);

enum class RoughnessTarget { UndisturbedValue, SmoothedValue };

struct RoughnessConfig {
  RoughnessTarget target = RoughnessTarget::UndisturbedValue;
  double gamma = 0.8;
  double sigma = 0.01;
  std::vector<double> hs = {1e-2, 1e-3, 1e-4, 1e-5};
  int probe_points = 1981;
  double eps = 1e-10;
};

std::string roughness_table(const RoughnessConfig& config);

}  // namespace vfc
