#include "vfc/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vfc {

namespace {

void require_valid_core(double L, double gamma, double D) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("bounds: requires gamma in (0,1)");
  if (!(D > 0.0)) throw std::invalid_argument("bounds: requires D > 0");
  if (!(L > 1.0))
    throw std::domain_error("bounds: unsupported case L <= 1 (the bound assumes L > 1)");
}

// expm1(z)/z extended continuously by 1 at z = 0.
double expm1_over_z(double z) {
  if (std::abs(z) < 1e-8) return 1.0 + z * (0.5 + z / 6.0);
  return std::expm1(z) / z;
}

}  // namespace

double ContinuityParams::beta() const {
  return std::log(1.0 / gamma) / std::log(L);
}

CaseLabel classify_case(double L, double gamma, double tol) {
  if (!(L > 0.0)) throw std::invalid_argument("classify_case: requires L > 0");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("classify_case: requires gamma in (0,1)");
  if (tol < 0.0) throw std::invalid_argument("classify_case: requires tol >= 0");
  const double excess = L * gamma - 1.0;
  if (std::abs(excess) <= tol) return CaseLabel::Equal;
  return excess < 0.0 ? CaseLabel::Less : CaseLabel::Greater;
}

std::string to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::Less: return "less";
    case CaseLabel::Equal: return "equal";
    case CaseLabel::Greater: return "greater";
  }
  return "?";
}

double crossing_time(double L, double D, double d0) {
  if (!(L > 1.0)) throw std::domain_error("crossing_time: requires L > 1");
  if (!(D > 0.0)) throw std::invalid_argument("crossing_time: requires D > 0");
  if (!(d0 > 0.0) || d0 > D)
    throw std::domain_error("crossing_time: requires 0 < d0 <= D");
  return std::log(D / d0) / std::log(L);
}

double k_of(const ContinuityParams& params, double d0) {
  require_valid_core(params.L, params.gamma, params.D);
  if (d0 < 0.0) throw std::domain_error("k_of: requires d0 >= 0");
  if (d0 > params.D) {
    // Distances exceed D only through rounding; anything larger is misuse.
    if (d0 > params.D * (1.0 + 1e-9))
      throw std::domain_error("k_of: d0 exceeds the diameter D");
    d0 = params.D;
  }
  if (d0 == 0.0) return 0.0;

  const double log_L = std::log(params.L);
  // ln(gamma L) via log1p: keeps full accuracy as gamma L -> 1, where the
  // separate branches of the textbook formula meet.
  const double log_gL = std::log1p(params.gamma * params.L - 1.0);
  const double t = std::log(params.D / d0);  // >= 0, exactly 0 at d0 = D
  const double z = (log_gL / log_L) * t;     // (1 - beta) t
  return d0 * (1.0 + t * expm1_over_z(z));
}

double h_of(const ContinuityParams& params, double d0) {
  return apply_modulus(params.reward_modulus, k_of(params, d0)) /
         std::log(1.0 / params.gamma);
}

double discrete_modulus_bound(const ContinuityParams& params, double d0) {
  return std::log(1.0 / params.gamma) / (1.0 - params.gamma) * h_of(params, d0);
}

HolderConstants holder_constants(const ContinuityParams& params,
                                 TimeDomain time_domain,
                                 std::optional<double> beta_choice) {
  if (!(params.gamma > 0.0 && params.gamma < 1.0))
    throw std::invalid_argument("holder_constants: requires gamma in (0,1)");
  if (!(params.L > 0.0)) throw std::invalid_argument("holder_constants: requires L > 0");
  if (!(params.D > 0.0)) throw std::invalid_argument("holder_constants: requires D > 0");
  const auto* lin = std::get_if<LinearModulus>(&params.reward_modulus);
  if (lin == nullptr)
    throw std::invalid_argument("holder_constants: requires a Lipschitz reward modulus");
  const double C = lin->C;
  const double gamma = params.gamma;
  const double L = params.L;
  const double time_factor = time_domain == TimeDomain::Continuous
                                 ? 1.0 / std::log(1.0 / gamma)
                                 : 1.0 / (1.0 - gamma);

  switch (classify_case(L, gamma)) {
    case CaseLabel::Less: {
      const double A = time_domain == TimeDomain::Continuous
                           ? C / std::log(1.0 / (gamma * L))
                           : C / (1.0 - gamma * L);
      return {A, 1.0, false};
    }
    case CaseLabel::Equal: {
      if (!beta_choice.has_value())
        throw std::invalid_argument("holder_constants: case L = 1/gamma needs a beta choice");
      const double beta = *beta_choice;
      if (!(beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("holder_constants: beta choice must lie in (0,1)");
      const double D = params.D;
      const double A =
          C *
          (1.0 / (std::numbers::e * (1.0 - beta)) +
           std::pow(D, 1.0 - beta) * (std::log(D) + 1.0)) *
          time_factor;
      return {A, beta, beta > 0.99};
    }
    case CaseLabel::Greater: {
      const double beta = params.beta();
      const double A = C * std::pow(params.D, 1.0 - beta) * std::log(L) /
                       std::log(gamma * L) * time_factor;
      return {A, beta, false};
    }
  }
  throw std::logic_error("holder_constants: unreachable");
}

double variance_bound(double A, double beta,
                      std::span<const double> component_variances) {
  if (!(A >= 0.0)) throw std::invalid_argument("variance_bound: requires A >= 0");
  if (!(beta > 0.0 && beta <= 1.0))
    throw std::invalid_argument("variance_bound: requires beta in (0,1]");
  double total = 0.0;
  for (double v : component_variances) {
    if (v < 0.0) throw std::invalid_argument("variance_bound: negative variance");
    total += v;
  }
  return A * A / std::pow(2.0, 1.0 - beta) * std::pow(total, beta);
}

void ModulusCurve::validate(double max_d0) const {
  if (d0.size() != value.size())
    throw std::invalid_argument("ModulusCurve: size mismatch");
  for (std::size_t i = 0; i < d0.size(); ++i) {
    if (!(d0[i] > 0.0) || d0[i] > max_d0)
      throw std::invalid_argument("ModulusCurve: d0 outside (0, D]");
    if (i > 0 && !(d0[i] > d0[i - 1]))
      throw std::invalid_argument("ModulusCurve: d0 not strictly increasing");
    if (value[i] < 0.0) throw std::invalid_argument("ModulusCurve: negative value");
    if (i > 0 && value[i] < value[i - 1])
      throw std::invalid_argument("ModulusCurve: values not nondecreasing");
  }
}

bool curve_dominates(const ModulusCurve& bound, const ModulusCurve& curve,
                     double slack) {
  if (bound.size() != curve.size())
    throw std::invalid_argument("curve_dominates: curves sampled on different grids");
  for (std::size_t i = 0; i < bound.size(); ++i) {
    if (bound.d0[i] != curve.d0[i])
      throw std::invalid_argument("curve_dominates: curves sampled on different grids");
    if (bound.value[i] + slack < curve.value[i]) return false;
  }
  return true;
}

}  // namespace vfc
