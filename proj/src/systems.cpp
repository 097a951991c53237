#include "vfc/systems.hpp"

#include <cmath>
#include <stdexcept>

namespace vfc {

System System::logistic() {
  return System(Kind::Logistic, TimeDomain::Discrete, {0.0, 1.0}, 4.0, 0.0);
}

System System::power_map(double L) {
  if (!(L > 1.0)) throw std::invalid_argument("power_map: requires L > 1");
  return System(Kind::PowerMap, TimeDomain::Discrete, {0.0, 1.0}, L, 0.0);
}

System System::clipped_linear(double L, double D) {
  if (!(L > 1.0)) throw std::invalid_argument("clipped_linear: requires L > 1");
  if (!(D > 0.0)) throw std::invalid_argument("clipped_linear: requires D > 0");
  return System(Kind::ClippedLinear, TimeDomain::Continuous, {0.0, D}, L, 0.0);
}

System System::noisy_logistic(double sigma) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("noisy_logistic: requires sigma >= 0");
  return System(Kind::NoisyMap, TimeDomain::Discrete, {0.0, 1.0}, 4.0, sigma);
}

double System::deterministic_map(double x) const {
  switch (kind_) {
    case Kind::Logistic:
    case Kind::NoisyMap:
      return space_.clamp(4.0 * x * (1.0 - x));
    case Kind::PowerMap:
      // exp(L ln x) with fixed-point shortcuts; avoids pow underflow near 0.
      if (x == 0.0) return 0.0;
      if (x == 1.0) return 1.0;
      return space_.clamp(std::exp(L_ * std::log(x)));
    case Kind::ClippedLinear:
      break;
  }
  throw std::logic_error("deterministic_map: continuous-time variant");
}

double System::step(double x, RngStream& rng) const {
  if (time_domain_ != TimeDomain::Discrete)
    throw std::invalid_argument("step: system is not discrete-time");
  if (!space_.contains(x)) throw std::domain_error("step: state outside the interval");
  if (kind_ == Kind::NoisyMap) return step_with_noise(x, rng.gaussian(sigma_));
  return deterministic_map(x);
}

double System::step_with_noise(double x, double xi) const {
  if (kind_ == Kind::NoisyMap) return deterministic_map(space_.clamp(x + xi));
  return deterministic_map(x);
}

std::vector<double> System::trajectory(double x0, int n, RngStream& rng) const {
  if (n < 0) throw std::invalid_argument("trajectory: requires n >= 0");
  if (!space_.contains(x0)) throw std::domain_error("trajectory: state outside the interval");
  std::vector<double> states;
  states.reserve(static_cast<std::size_t>(n) + 1);
  states.push_back(x0);
  double x = x0;
  for (int k = 0; k < n; ++k) {
    x = step(x, rng);
    states.push_back(x);
  }
  return states;
}

double System::flow(double t, double x) const {
  if (kind_ != Kind::ClippedLinear)
    throw std::invalid_argument("flow: only the ClippedLinear variant has a closed-form flow");
  if (t < 0.0) throw std::domain_error("flow: requires t >= 0");
  if (!space_.contains(x)) throw std::domain_error("flow: state outside the interval");
  const double D = space_.hi;
  if (x == 0.0) return 0.0;
  // L^t x without overflow: compare in log space first.
  const double log_val = t * std::log(L_) + std::log(x);
  if (log_val >= std::log(D)) return D;
  return std::min(D, std::exp(log_val));
}

FloorLift::FloorLift(const System& system, double t) : system_(&system) {
  if (system.time_domain() != TimeDomain::Discrete)
    throw std::invalid_argument("lift_to_continuous: system is not discrete-time");
  if (t < 0.0) throw std::domain_error("lift_to_continuous: requires t >= 0");
  steps_ = static_cast<int>(std::floor(t));
}

double FloorLift::operator()(double x, RngStream& rng) const {
  return system_->trajectory(x, steps_, rng).back();
}

FloorLift lift_to_continuous(const System& system, double t) {
  return FloorLift(system, t);
}

double estimate_le_ratio(const System& system,
                         std::span<const std::pair<double, double>> pairs,
                         int horizon, int samples, double L, RngStream& rng) {
  if (pairs.empty()) throw std::invalid_argument("estimate_le_ratio: empty pair list");
  if (horizon < 1) throw std::invalid_argument("estimate_le_ratio: requires horizon >= 1");
  if (samples < 1) throw std::invalid_argument("estimate_le_ratio: requires samples >= 1");
  if (!(L > 0.0)) throw std::invalid_argument("estimate_le_ratio: requires L > 0");

  const MetricInterval& space = system.space();
  double worst = 0.0;

  if (system.time_domain() == TimeDomain::Continuous) {
    // Deterministic closed-form flow; probe a fixed grid of times.
    constexpr int kStepsPerUnit = 4;
    for (const auto& [x, y] : pairs) {
      const double d0 = space.distance(x, y);
      if (d0 == 0.0) throw std::invalid_argument("estimate_le_ratio: pair points must be distinct");
      for (int k = 1; k <= horizon * kStepsPerUnit; ++k) {
        const double t = static_cast<double>(k) / kStepsPerUnit;
        const double dist = space.distance(system.flow(t, x), system.flow(t, y));
        const double ratio = dist / (std::pow(L, t) * d0);
        worst = std::max(worst, ratio);
      }
    }
    return worst;
  }

  const int effective_samples = system.stochastic() ? samples : 1;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [x0, y0] = pairs[p];
    const double d0 = space.distance(x0, y0);
    if (d0 == 0.0) throw std::invalid_argument("estimate_le_ratio: pair points must be distinct");
    std::vector<double> mean_dist(static_cast<std::size_t>(horizon), 0.0);
    for (int s = 0; s < effective_samples; ++s) {
      RngStream noise = rng.substream(p * static_cast<std::size_t>(effective_samples) + s);
      double x = x0, y = y0;
      for (int t = 1; t <= horizon; ++t) {
        // Coupled noise: one disturbance drives both trajectories.
        const double xi = system.stochastic() ? noise.gaussian(system.sigma()) : 0.0;
        x = system.step_with_noise(x, xi);
        y = system.step_with_noise(y, xi);
        mean_dist[t - 1] += space.distance(x, y);
      }
    }
    double scale = d0;
    for (int t = 1; t <= horizon; ++t) {
      scale *= L;
      const double ratio = mean_dist[t - 1] / effective_samples / scale;
      worst = std::max(worst, ratio);
    }
  }
  return worst;
}

}  // namespace vfc
