#include "vfc/figures.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <stdexcept>

#include "vfc/csv.hpp"
#include "vfc/numerics.hpp"

namespace vfc {

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << contents;
  if (!out) throw std::runtime_error("write failed: " + path);
}

GridFunction sample_power_value(double L, double gamma, int points, double eps) {
  GridFunction f{linspace(0.0, 1.0, points), {}, {0.0, 1.0}};
  f.ys.resize(f.xs.size());
  for (std::size_t i = 0; i < f.xs.size(); ++i)
    f.ys[i] = value_power_closed_series(L, gamma, f.xs[i], eps);
  return f;
}

GridFunction sample_logistic_value(double gamma, int points, double eps) {
  const System system = System::logistic();
  const RewardSpec reward = RewardSpec::identity(system.space());
  RngStream rng(0);
  GridFunction f{linspace(0.0, 1.0, points), {}, {0.0, 1.0}};
  f.ys.resize(f.xs.size());
  for (std::size_t i = 0; i < f.xs.size(); ++i)
    f.ys[i] = value_discrete(system, reward, gamma, f.xs[i], eps, 1, rng).value;
  return f;
}

GridFunction sample_clipped_linear_value(double A, double L, double gamma,
                                         double D, int points) {
  GridFunction f{linspace(0.0, D, points), {}, {0.0, D}};
  f.ys.resize(f.xs.size());
  for (std::size_t i = 0; i < f.xs.size(); ++i)
    f.ys[i] = value_clipped_linear_closed_form(A, L, gamma, D, f.xs[i]);
  return f;
}

NoisyValueGrid sample_noisy_logistic_value(double gamma, double sigma,
                                           int points, int samples, double eps,
                                           RngStream& rng) {
  const System system = System::noisy_logistic(sigma);
  const RewardSpec reward = RewardSpec::identity(system.space());
  NoisyValueGrid out{{linspace(0.0, 1.0, points), {}, {0.0, 1.0}}, 0.0};
  out.values.ys.resize(out.values.xs.size());
  for (std::size_t i = 0; i < out.values.xs.size(); ++i) {
    // One shared parent stream: common random numbers across grid points.
    const ValueEstimate est =
        value_discrete(system, reward, gamma, out.values.xs[i], eps, samples, rng);
    out.values.ys[i] = est.value;
    out.max_standard_error = std::max(out.max_standard_error, est.statistical_error);
  }
  return out;
}

Figure1Result run_figure1(const Figure1Config& config) {
  const System base = System::logistic();
  const RewardSpec reward = RewardSpec::identity(base.space());
  const MetricInterval state_space = base.space();
  const auto map = [state_space](double x) {
    const double c = state_space.clamp(x);
    return 4.0 * c * (1.0 - c);
  };

  SmoothedValueGrid w = solve_smoothed_value(
      map, reward, config.gamma, config.sigma, config.window_lo,
      config.window_hi, config.grid_points, config.quad_nodes, config.tol,
      2000);

  RngStream rng(0);
  const auto r_prime = [](double) { return 1.0; };
  const double h = w.spacing();

  CsvTable table({"x", "v_undisturbed", "w_smoothed", "dw_formula", "dw_finite_diff"});
  for (std::size_t i = 0; i < w.xs.size(); ++i) {
    const double x = w.xs[i];
    if (x < 0.0 || x > 1.0) continue;
    const double v =
        value_discrete(base, reward, config.gamma, x, config.eps, 1, rng).value;
    const double dw =
        gradient_smoothed(w, map, r_prime, x, config.quad_nodes);
    const double fd = finite_difference(w, x, h);
    table.add_row({x, v, w.ws[i], dw, fd});
  }
  return {table.to_string(), std::move(w)};
}

Figure2Result run_figure2(const Figure2Config& config) {
  const std::size_t m = config.gammas.size();

  struct PerGamma {
    GridFunction value;
    double v_max;
    ModulusCurve modulus;
    ModulusCurve bound;
  };

  const std::vector<double> d0_grid =
      logspace(config.d0_lo, config.d0_hi, config.d0_points);

  // Independent discount factors in parallel; assembly stays ordered.
  std::vector<PerGamma> per(m);
  std::vector<std::future<void>> jobs;
  for (std::size_t g = 0; g < m; ++g) {
    jobs.push_back(std::async(std::launch::async, [&, g] {
      const double gamma = config.gammas[g];
      PerGamma& slot = per[g];
      slot.value =
          sample_power_value(config.L, gamma, config.value_points, config.eps);
      slot.v_max = slot.value.ys.back();  // v is maximal at x = 1
      slot.modulus = empirical_modulus(slot.value, d0_grid);
      const ContinuityParams params{config.L, gamma, 1.0, LinearModulus{1.0}};
      slot.bound = ModulusCurve{CurveKind::TheoremBound, d0_grid, {}};
      slot.bound.value.resize(d0_grid.size());
      for (std::size_t k = 0; k < d0_grid.size(); ++k)
        slot.bound.value[k] = discrete_modulus_bound(params, d0_grid[k]);
    }));
  }
  for (auto& j : jobs) j.get();

  std::vector<std::string> left_header{"x"};
  for (std::size_t g = 0; g < m; ++g)
    left_header.push_back("v_gamma" + std::to_string(g) + "_norm");
  CsvTable left(left_header);
  for (std::size_t i = 0; i < per[0].value.xs.size(); ++i) {
    std::vector<double> row{per[0].value.xs[i]};
    for (std::size_t g = 0; g < m; ++g)
      row.push_back(per[g].value.ys[i] / per[g].v_max);
    left.add_row(row);
  }

  std::vector<std::string> right_header{"d0"};
  for (std::size_t g = 0; g < m; ++g) {
    right_header.push_back("W_gamma" + std::to_string(g));
    right_header.push_back("bound_gamma" + std::to_string(g));
  }
  for (std::size_t g = 0; g < m; ++g) {
    right_header.push_back("W_norm_gamma" + std::to_string(g));
    right_header.push_back("bound_norm_gamma" + std::to_string(g));
  }
  CsvTable right(right_header);
  for (std::size_t k = 0; k < d0_grid.size(); ++k) {
    std::vector<double> row{d0_grid[k]};
    for (std::size_t g = 0; g < m; ++g) {
      row.push_back(per[g].modulus.value[k]);
      row.push_back(per[g].bound.value[k]);
    }
    for (std::size_t g = 0; g < m; ++g) {
      row.push_back(per[g].modulus.value[k] / per[g].v_max);
      row.push_back(per[g].bound.value[k] / per[g].v_max);
    }
    right.add_row(row);
  }

  return {left.to_string(), right.to_string()};
}

std::string bounds_table(const BoundsTableConfig& config) {
  const ContinuityParams params{config.L, config.gamma, config.D,
                                LinearModulus{config.C}};
  const HolderConstants holder =
      holder_constants(params, config.time_domain, config.beta_choice);
  const std::vector<double> d0_grid =
      logspace(config.d0_lo, config.D, config.d0_points);

  CsvTable table({"d0", "K", "H", "discrete_bound", "holder_bound"});
  for (double d0 : d0_grid) {
    table.add_row({d0, k_of(params, d0), h_of(params, d0),
                   discrete_modulus_bound(params, d0),
                   holder.A * std::pow(d0, holder.beta)});
  }
  return table.to_string();
}

std::string modulus_table(const ModulusTableConfig& config) {
  const GridFunction value =
      sample_power_value(config.L, config.gamma, config.grid_points, config.eps);
  const std::vector<double> d0_grid =
      logspace(config.d0_lo, config.d0_hi, config.d0_points);
  const ModulusCurve empirical = empirical_modulus(value, d0_grid);
  const ContinuityParams params{config.L, config.gamma, 1.0, LinearModulus{1.0}};

  CsvTable table({"d0", "W_empirical", "W_closed_form", "bound"});
  for (std::size_t k = 0; k < d0_grid.size(); ++k) {
    table.add_row({d0_grid[k], empirical.value[k],
                   modulus_power_example(config.L, config.gamma, d0_grid[k], config.eps),
                   discrete_modulus_bound(params, d0_grid[k])});
  }
  return table.to_string();
}

std::string roughness_table(const RoughnessConfig& config) {
  const double h_max = config.hs.front();
  const std::vector<double> probes = linspace(0.0, 1.0 - h_max, config.probe_points);

  std::function<double(double)> f;
  if (config.target == RoughnessTarget::UndisturbedValue) {
    const System base = System::logistic();
    const RewardSpec reward = RewardSpec::identity(base.space());
    f = [=](double x) {
      RngStream rng(0);
      return value_discrete(base, reward, config.gamma, x, config.eps, 1, rng).value;
    };
  } else {
    const MetricInterval state_space{0.0, 1.0};
    const auto map = [state_space](double x) {
      const double c = state_space.clamp(x);
      return 4.0 * c * (1.0 - c);
    };
    const RewardSpec reward = RewardSpec::identity(state_space);
    SmoothedValueGrid w = solve_smoothed_value(map, reward, config.gamma,
                                               config.sigma, -0.2, 1.2, 4001,
                                               64, 1e-8, 2000);
    f = [w = std::move(w)](double x) { return w.eval(x); };
  }

  CsvTable table({"h", "max_quotient"});
  for (const auto& [h, q] : difference_quotient_profile(f, probes, config.hs))
    table.add_row({h, q});
  return table.to_string();
}

}  // namespace vfc
