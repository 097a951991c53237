#pragma once

#include "vfc/bounds.hpp"
#include "vfc/reward.hpp"
#include "vfc/systems.hpp"

namespace vfc {

/// A value with explicit error budget. truncation_error bounds the dropped
/// geometric tail; statistical_error is the standard error of the Monte
/// Carlo mean (0 for deterministic systems).
struct ValueEstimate {
  double value;
  double truncation_error;
  double statistical_error;
  int horizon_used;
};

/// Smallest N with sum_{n>N} gamma^n sup_abs <= eps.
int truncation_horizon(double gamma, double sup_abs, double eps);

/// Discounted value sum_{n=0..N} gamma^n E[r(Phi_n(x))] of a discrete-time
/// system, truncated at the horizon certified by eps. Stochastic systems
/// average `samples` independent trajectories; deterministic systems ignore
/// `samples` and report statistical_error 0.
ValueEstimate value_discrete(const System& system, const RewardSpec& reward,
                             double gamma, double x, double eps, int samples,
                             RngStream& rng);

/// Exact value of the clipped-linear flow min{D, L^t x} under r(x) = A x:
/// v(x) = A K(x)/ln(1/gamma).
double value_clipped_linear_closed_form(double A, double L, double gamma,
                                        double D, double x);

/// Value of the floor-lifted continuous-time extension, given the discrete
/// value: v_c = (1-gamma)/ln(1/gamma) * v.
double value_continuous_from_discrete(double v, double gamma);

/// Truncated series sum_n gamma^n x^(L^n) for the map x -> x^L on [0,1],
/// with tail gamma^(N+1)/(1-gamma) <= eps. Terms are exp(L^n ln x) with
/// hard 0/1 fixed-point shortcuts.
double value_power_closed_series(double L, double gamma, double x, double eps);

}  // namespace vfc
