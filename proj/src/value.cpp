#include "vfc/value.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

#include "vfc/numerics.hpp"

namespace vfc {

namespace {

void require_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("value: requires gamma in (0,1)");
}

double discounted_trajectory_sum(const System& system, const RewardSpec& reward,
                                 double gamma, double x, int horizon,
                                 RngStream& rng) {
  std::vector<double> terms(static_cast<std::size_t>(horizon) + 1);
  const MetricInterval& space = system.space();
  double state = x;
  double discount = 1.0;
  for (int n = 0;; ++n) {
    // Rewards see clamped states so noisy excursions never leave r's domain.
    terms[static_cast<std::size_t>(n)] = discount * reward.r(space.clamp(state));
    if (n == horizon) break;
    state = system.step(state, rng);
    discount *= gamma;
  }
  return pairwise_sum(terms);
}

}  // namespace

int truncation_horizon(double gamma, double sup_abs, double eps) {
  require_gamma(gamma);
  if (!(eps > 0.0)) throw std::invalid_argument("value: requires eps > 0");
  if (!(sup_abs >= 0.0)) throw std::invalid_argument("value: requires sup_abs >= 0");
  const double target = eps * (1.0 - gamma) / std::max(sup_abs, 1e-300);
  if (target >= 1.0) return 0;
  return static_cast<int>(std::ceil(std::log(target) / std::log(gamma)));
}

ValueEstimate value_discrete(const System& system, const RewardSpec& reward,
                             double gamma, double x, double eps, int samples,
                             RngStream& rng) {
  require_gamma(gamma);
  if (system.time_domain() != TimeDomain::Discrete)
    throw std::invalid_argument("value_discrete: system is not discrete-time");
  if (samples < 1) throw std::invalid_argument("value_discrete: requires samples >= 1");
  const int horizon = truncation_horizon(gamma, reward.sup_abs, eps);
  const double tail = reward.sup_abs * std::pow(gamma, horizon + 1) / (1.0 - gamma);

  if (!system.stochastic()) {
    RngStream unused = rng.substream(0);
    const double v = discounted_trajectory_sum(system, reward, gamma, x, horizon, unused);
    return {v, tail, 0.0, horizon};
  }

  // Independent trajectories in batches, one derived stream per batch.
  constexpr int kBatch = 1024;
  const int batches = (samples + kBatch - 1) / kBatch;
  std::vector<std::vector<double>> batch_values(static_cast<std::size_t>(batches));
  std::vector<std::future<void>> jobs;
  jobs.reserve(static_cast<std::size_t>(batches));
  for (int b = 0; b < batches; ++b) {
    jobs.push_back(std::async(std::launch::async, [&, b] {
      const int lo = b * kBatch;
      const int hi = std::min(samples, lo + kBatch);
      RngStream stream = rng.substream(static_cast<std::uint64_t>(b));
      auto& out = batch_values[static_cast<std::size_t>(b)];
      out.resize(static_cast<std::size_t>(hi - lo));
      for (int s = lo; s < hi; ++s)
        out[static_cast<std::size_t>(s - lo)] =
            discounted_trajectory_sum(system, reward, gamma, x, horizon, stream);
    }));
  }
  for (auto& j : jobs) j.get();

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(samples));
  for (const auto& bv : batch_values) values.insert(values.end(), bv.begin(), bv.end());

  const double mean = pairwise_sum(values) / samples;
  double sq = 0.0;
  if (samples > 1) {
    std::vector<double> dev(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double d = values[i] - mean;
      dev[i] = d * d;
    }
    sq = pairwise_sum(dev) / (samples - 1);
  }
  const double stderr_mean = samples > 1 ? std::sqrt(sq / samples) : 0.0;
  return {mean, tail, stderr_mean, horizon};
}

double value_clipped_linear_closed_form(double A, double L, double gamma,
                                        double D, double x) {
  require_gamma(gamma);
  if (x < 0.0 || x > D)
    throw std::domain_error("value_clipped_linear_closed_form: x outside [0, D]");
  const ContinuityParams params{L, gamma, D, LinearModulus{1.0}};
  return A * k_of(params, x) / std::log(1.0 / gamma);
}

double value_continuous_from_discrete(double v, double gamma) {
  require_gamma(gamma);
  return (1.0 - gamma) / std::log(1.0 / gamma) * v;
}

double value_power_closed_series(double L, double gamma, double x, double eps) {
  require_gamma(gamma);
  if (!(L > 1.0)) throw std::invalid_argument("value_power_closed_series: requires L > 1");
  if (!(eps > 0.0)) throw std::invalid_argument("value_power_closed_series: requires eps > 0");
  if (x < 0.0 || x > 1.0)
    throw std::domain_error("value_power_closed_series: x outside [0,1]");
  if (x == 0.0) return 0.0;

  // Tail gamma^(N+1)/(1-gamma) <= eps.
  const int horizon = truncation_horizon(gamma, 1.0, eps);
  if (x == 1.0) {
    // sum_{n<=N} gamma^n
    return (1.0 - std::pow(gamma, horizon + 1)) / (1.0 - gamma);
  }

  const double log_x = std::log(x);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(horizon) + 1);
  double discount = 1.0;
  double exponent = 1.0;  // L^n
  for (int n = 0; n <= horizon; ++n) {
    const double e = exponent * log_x;
    if (e < -745.0) break;  // exp underflows; every later term is smaller
    terms.push_back(discount * std::exp(e));
    discount *= gamma;
    exponent *= L;
  }
  return pairwise_sum(terms);
}

}  // namespace vfc
