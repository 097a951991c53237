#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vfc/reward.hpp"
#include "vfc/systems.hpp"

namespace vfc {

/// Everything the continuity bounds depend on: the LE constant L of the
/// system, the discount factor gamma, the diameter D of the state space,
/// and the reward modulus.
struct ContinuityParams {
  double L;
  double gamma;
  double D;
  ModulusKind reward_modulus;

  /// Exponent ln(1/gamma)/ln L. In (0,1) for L > 1/gamma, 1 at L = 1/gamma,
  /// above 1 for 1 < L < 1/gamma.
  double beta() const;
};

/// Trichotomy on L vs 1/gamma, decided with tolerance tol on L*gamma - 1.
enum class CaseLabel { Less, Equal, Greater };

constexpr double kCaseTolerance = 1e-9;

CaseLabel classify_case(double L, double gamma, double tol = kCaseTolerance);

std::string to_string(CaseLabel c);

/// Time delta at which the divergence envelope L^t d0 reaches the diameter:
/// delta = ln(D/d0)/ln L.
double crossing_time(double L, double D, double d0);

/// Closed-form bound K on the discounted accumulated state distance,
///
///   K(d0) = (ln L/ln(gL)) D^(1-b) d0^b + (ln g/ln(gL)) d0   for L != 1/g,
///   K(d0) = (ln(D/d0) + 1) d0                               for L  = 1/g,
///
/// with b = ln(1/g)/ln L and K(0) = 0. Both branches are the same smooth
/// function of z = (1-b) ln(D/d0); it is evaluated here as
/// K = d0 (1 + t expm1(z)/z), t = ln(D/d0), which is exact at d0 = D and
/// stays accurate through the branch point gL -> 1 where the textbook form
/// suffers catastrophic cancellation. Requires L > 1 and 0 <= d0 <= D;
/// d0 overshooting D by a rounding-sized amount is clamped to D.
double k_of(const ContinuityParams& params, double d0);

/// Modulus bound H(d0) = R(K(d0))/ln(1/gamma) for continuous time.
double h_of(const ContinuityParams& params, double d0);

/// Discrete-time modulus bound (ln(1/gamma)/(1-gamma)) H(d0).
double discrete_modulus_bound(const ContinuityParams& params, double d0);

/// Hoelder constants (A, beta) with |v(x)-v(x')| <= A d(x,x')^beta, from the
/// case trichotomy for Lipschitz rewards R(d) = C d:
///
///   L < 1/g:  beta = 1,  A = C/ln(1/(gL))            (continuous)
///                        A = C/(1-gL)                 (discrete)
///   L = 1/g:  caller picks beta in (0,1),
///             A = C (1/(e(1-beta)) + D^(1-beta)(ln D + 1)) * f
///   L > 1/g:  beta = ln(1/g)/ln L,
///             A = C D^(1-beta) ln L / ln(gL) * f
///
/// where f = 1/ln(1/g) in continuous time and 1/(1-g) in discrete time.
struct HolderConstants {
  double A;
  double beta;
  /// Set when beta > 0.99 in the Equal case, where A grows without bound.
  bool near_one_warning = false;
};

HolderConstants holder_constants(const ContinuityParams& params,
                                 TimeDomain time_domain,
                                 std::optional<double> beta_choice = std::nullopt);

/// Variance bound for Hoelder-continuous v evaluated at a random state:
/// Var[v(X)] <= (A^2 / 2^(1-beta)) (sum_i Var[X_i])^beta.
double variance_bound(double A, double beta,
                      std::span<const double> component_variances);

/// Sampled curve d0 -> value with provenance.
enum class CurveKind { EmpiricalModulus, ClosedFormModulus, TheoremBound, HolderBound };

struct ModulusCurve {
  CurveKind kind;
  std::vector<double> d0;
  std::vector<double> value;

  std::size_t size() const { return d0.size(); }
  /// Enforces strictly increasing d0 in (0, max_d0] and nonnegative,
  /// nondecreasing values; throws std::invalid_argument otherwise.
  void validate(double max_d0) const;
};

/// True when bound.value[i] + slack >= curve.value[i] at every shared index.
/// Both curves must be sampled on the same d0 grid.
bool curve_dominates(const ModulusCurve& bound, const ModulusCurve& curve,
                     double slack = 0.0);

}  // namespace vfc
