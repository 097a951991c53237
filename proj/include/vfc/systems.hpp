#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "vfc/rng.hpp"

namespace vfc {

enum class TimeDomain { Discrete, Continuous };

/// Bounded 1-D state space [lo, hi] with the Euclidean metric.
struct MetricInterval {
  double lo;
  double hi;

  double diameter() const { return hi - lo; }
  double distance(double x, double y) const { return x < y ? y - x : x - y; }
  bool contains(double x) const { return x >= lo && x <= hi; }
  double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
};

/// A dynamical system on a bounded interval. The built-in variants:
///
///   Logistic       x -> 4x(1-x) on [0,1], discrete time
///   PowerMap       x -> x^L on [0,1] (L > 1), discrete time
///   ClippedLinear  flow (t,x) -> min{D, L^t x} on [0,D], continuous time
///   NoisyMap       x -> base(clamp(x + xi)), xi ~ N(0, sigma^2), discrete time
///
/// Discrete-time variants are iterated with step()/trajectory(); the
/// continuous-time variant has the closed-form flow().
class System {
 public:
  enum class Kind { Logistic, PowerMap, ClippedLinear, NoisyMap };

  static System logistic();
  static System power_map(double L);
  static System clipped_linear(double L, double D);
  /// Logistic map extended to all of R by clamping onto [0,1] before each
  /// application, disturbed by Gaussian noise of standard deviation sigma.
  static System noisy_logistic(double sigma);

  Kind kind() const { return kind_; }
  TimeDomain time_domain() const { return time_domain_; }
  const MetricInterval& space() const { return space_; }
  double lipschitz_constant() const { return L_; }
  double sigma() const { return sigma_; }
  bool stochastic() const { return kind_ == Kind::NoisyMap; }

  /// One discrete-time transition. Deterministic variants ignore rng.
  double step(double x, RngStream& rng) const;

  /// Transition driven by an externally supplied disturbance, used to run
  /// coupled trajectories that share one noise sequence.
  double step_with_noise(double x, double xi) const;

  /// States x0, Phi(x0), ..., Phi^n(x0).
  std::vector<double> trajectory(double x0, int n, RngStream& rng) const;

  /// Closed-form flow of the ClippedLinear variant: min{D, L^t x}.
  double flow(double t, double x) const;

 private:
  System(Kind kind, TimeDomain td, MetricInterval space, double L, double sigma)
      : kind_(kind), time_domain_(td), space_(space), L_(L), sigma_(sigma) {}

  double deterministic_map(double x) const;

  Kind kind_;
  TimeDomain time_domain_;
  MetricInterval space_;
  double L_;      // nominal LE constant of the variant
  double sigma_;  // NoisyMap only
};

/// Floor-lifted view of a discrete-time system: evaluating at time t runs
/// floor(t) discrete steps, extending the system to continuous time.
class FloorLift {
 public:
  FloorLift(const System& system, double t);
  double operator()(double x, RngStream& rng) const;

 private:
  const System* system_;
  int steps_;
};

FloorLift lift_to_continuous(const System& system, double t);

/// Largest Monte Carlo estimate, over the given pairs and over times up to
/// `horizon`, of E[d(Phi_t(x), Phi_t(x'))] / (L^t d(x,x')). A result at or
/// below 1 + statistical slack certifies LE-continuity with constant L
/// empirically. Stochastic systems run both trajectories of a pair against
/// the same noise sequence.
double estimate_le_ratio(const System& system,
                         std::span<const std::pair<double, double>> pairs,
                         int horizon, int samples, double L, RngStream& rng);

}  // namespace vfc
