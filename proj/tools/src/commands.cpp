#include "fkfront_app/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fkfront/asymptotics.hpp"
#include "fkfront/io.hpp"
#include "fkfront/spectral.hpp"
#include "fkfront/wkb.hpp"

namespace fkfront::app {
namespace {

Trajectory simulate_config(const ExperimentConfig& config, double epsilon) {
  return simulate(config.grid(), config.diffusion(epsilon), logistic_reaction(), config.front(),
                  config.solver);
}

void add_csv(OutputSet& out, const std::string& name, const std::string& body,
             const std::string& command, const ExperimentConfig& config,
             const nlohmann::ordered_json& extra = nlohmann::ordered_json::object()) {
  out.add(name, body);
  out.add_sidecar(name, command, config.hash_hex(), config.to_json(), extra);
}

std::string stamped_json(const std::string& body, const ExperimentConfig& config) {
  auto j = nlohmann::ordered_json::parse(body);
  j["config_hash"] = config.hash_hex();
  return j.dump(2) + "\n";
}

}  // namespace

OutputSet run_simulate(const ExperimentConfig& config) {
  const Trajectory traj = simulate_config(config, config.physics.epsilon);
  OutputSet out;
  std::ostringstream fields, path;
  io::write_trajectory_csv(fields, traj);
  io::write_front_path_csv(path, track_front(traj, config.physics.level));
  add_csv(out, "trajectory.csv", fields.str(), "simulate", config,
          {{"snapshots", traj.fields.size()}});
  add_csv(out, "front_path.csv", path.str(), "simulate", config);
  return out;
}

std::optional<double> sfa_front(const Snapshot& initial, const Grid& grid, double t,
                                double level) {
  const auto g = [&](double x) { return sfa_evolve(initial, x, t) >= level; };
  // rightmost sign change on the nodes, then bisection on the continuous field
  for (std::size_t i = grid.size() - 1; i-- > 0;) {
    double lo = grid.x(i), hi = grid.x(i + 1);
    const bool left = g(lo);
    if (left == g(hi)) continue;
    for (int k = 0; k < 60; ++k) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) == left ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }
  return std::nullopt;
}

std::vector<SfaComparisonRow> compare_sfa_rows(const Trajectory& traj, double level) {
  std::vector<SfaComparisonRow> rows;
  if (traj.fields.empty()) return rows;
  const Snapshot initial(traj.fields.front());
  const Grid& grid = traj.fields.front().grid;
  for (const Field& f : traj.fields) {
    SfaComparisonRow row;
    row.t = f.time;
    row.xc_numeric = locate_front(f, level);
    row.xc_sfa = sfa_front(initial, grid, f.time, level);
    if (row.xc_numeric && row.xc_sfa) row.abs_diff = std::abs(*row.xc_numeric - *row.xc_sfa);
    rows.push_back(row);
  }
  return rows;
}

OutputSet run_compare_sfa(const ExperimentConfig& config) {
  const Trajectory traj = simulate_config(config, config.physics.epsilon);
  const auto rows = compare_sfa_rows(traj, config.physics.level);

  std::ostringstream cmp, twc;
  io::CsvWriter cmp_csv(cmp, {"t", "xc_numeric", "xc_sfa", "abs_diff"});
  double worst = 0.0;
  for (const auto& r : rows) {
    cmp_csv.cell(r.t).cell(r.xc_numeric).cell(r.xc_sfa).cell(r.abs_diff).end_row();
    if (r.abs_diff) worst = std::max(worst, *r.abs_diff);
  }

  io::CsvWriter twc_csv(twc, {"t", "x_pred"});
  const std::optional<double> start = rows.empty() ? std::nullopt : rows.front().xc_numeric;
  if (start && *start != 0.0) {
    for (const auto& r : rows) {
      twc_csv.cell(r.t).cell(twc_front_path(*start, rows.front().t, r.t, config.sfa.speed)).end_row();
    }
  }

  OutputSet out;
  add_csv(out, "compare_sfa.csv", cmp.str(), "compare-sfa", config, {{"max_abs_diff", worst}});
  add_csv(out, "twc_path.csv", twc.str(), "compare-sfa", config, {{"speed", config.sfa.speed}});
  return out;
}

std::vector<double> distinct_epsilons(const std::vector<double>& epsilons,
                                      std::vector<double>* duplicates) {
  std::vector<double> unique;
  for (double e : epsilons) {
    if (std::find(unique.begin(), unique.end(), e) != unique.end()) {
      if (duplicates) duplicates->push_back(e);
      continue;
    }
    unique.push_back(e);
  }
  return unique;
}

std::vector<SweepEntry> sweep_trap_times(const ExperimentConfig& config,
                                         const std::vector<double>& epsilons,
                                         std::size_t workers) {
  std::vector<SweepEntry> entries(epsilons.size());
  const auto run_one = [&](std::size_t i) {
    const Trajectory traj = simulate_config(config, epsilons[i]);
    entries[i] = SweepEntry{epsilons[i],
                            trapping_time(track_front(traj, config.physics.level), config.sweep.trap_radius)};
  };
  workers = std::max<std::size_t>(1, std::min(workers, epsilons.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < epsilons.size(); ++i) run_one(i);
    return entries;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < epsilons.size(); i = next++) {
        try {
          run_one(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return entries;
}

OutputSet run_trap_sweep(const ExperimentConfig& config) {
  OutputSet out;
  std::vector<double> duplicates;
  const auto epsilons = distinct_epsilons(config.sweep.epsilons, &duplicates);
  for (double d : duplicates) out.warn("duplicate epsilon " + io::format_real(d) + " ignored");

  const auto entries = sweep_trap_times(config, epsilons, config.sweep.workers);

  std::ostringstream csv_body;
  io::CsvWriter csv(csv_body, {"epsilon", "trap_time"});
  std::vector<std::pair<double, double>> pairs;
  nlohmann::ordered_json runs = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    const double value = e.trap.transited() ? e.trap.duration : std::numeric_limits<double>::quiet_NaN();
    csv.cell(e.epsilon).cell(value).end_row();
    if (e.trap.transited()) {
      pairs.emplace_back(e.epsilon, e.trap.duration);
    } else {
      out.warn("epsilon " + io::format_real(e.epsilon) + ": " + to_string(e.trap.status));
    }
    nlohmann::ordered_json run{{"epsilon", e.epsilon}, {"status", to_string(e.trap.status)}};
    if (e.trap.status != TransitStatus::never_entered) run["t_enter"] = e.trap.t_enter;
    if (e.trap.transited()) run["t_exit"] = e.trap.t_exit;
    if (e.trap.status == TransitStatus::never_exited) run["duration_lower_bound"] = e.trap.duration;
    runs.push_back(run);
  }
  add_csv(out, "trap_sweep.csv", csv_body.str(), "trap-sweep", config,
          {{"trap_radius", config.sweep.trap_radius}, {"runs", runs}});

  for (FitMode mode : {FitMode::free_exponent, FitMode::fixed_exponent}) {
    const std::string name = mode == FitMode::free_exponent ? "fit_free.json" : "fit_fixed.json";
    try {
      out.add(name, stamped_json(io::fit_report_json(fit_power_law(pairs, mode)), config));
    } catch (const std::invalid_argument& e) {
      out.warn(std::string(to_string(mode)) + " fit failed: " + e.what());
      nlohmann::ordered_json j{{"error", e.what()}, {"mode", to_string(mode)}, {"config_hash", config.hash_hex()}};
      out.add(name, j.dump(2) + "\n");
    }
  }
  return out;
}

OutputSet run_eigen(const ExperimentConfig& config) {
  const Grid grid = config.grid();
  if (config.eigen.modes >= grid.size()) throw ConfigError("eigen.modes must be below domain.n");
  const auto eig = solve_eigenproblem(config.diffusion(), grid, config.eigen.modes);
  OutputSet out;
  std::ostringstream values;
  io::write_eigenvalues_csv(values, eig);
  add_csv(out, "eigenvalues.csv", values.str(), "eigen", config);
  for (std::size_t n = 0; n < config.eigen.export_modes; ++n) {
    std::ostringstream mode;
    io::write_mode_csv(mode, eig, n);
    add_csv(out, "phi_" + std::to_string(n) + ".csv", mode.str(), "eigen", config,
            {{"n", n}, {"lambda", eig.eigenvalues[n]}});
  }
  if (config.physics.profile == ProfileKind::constant) {
    // closed-form Neumann spectrum -D (n pi / 2L)^2
    std::ostringstream oracle;
    io::CsvWriter csv(oracle, {"n", "lambda", "lambda_exact", "rel_error"});
    double worst = 0.0;
    for (std::size_t n = 0; n < eig.count(); ++n) {
      const double k = static_cast<double>(n) * std::numbers::pi / (2.0 * grid.half_length());
      const double exact = n == 0 ? 0.0 : -config.physics.diffusion_constant * k * k;
      const double rel = n == 0 ? std::abs(eig.eigenvalues[n]) : std::abs(eig.eigenvalues[n] / exact - 1.0);
      worst = std::max(worst, rel);
      csv.cell(static_cast<long long>(n)).cell(eig.eigenvalues[n]).cell(exact).cell(rel).end_row();
    }
    add_csv(out, "eigen_oracle.csv", oracle.str(), "eigen", config, {{"max_rel_error", worst}});
  }
  return out;
}

OutputSet run_wkb(const ExperimentConfig& config) {
  const auto diffusion = make_quadratic_diffusion(config.physics.epsilon);
  OutputSet out;
  for (std::size_t k = 0; k < config.wkb.htilde.size(); ++k) {
    const double h = config.wkb.htilde[k];
    std::ostringstream body;
    io::CsvWriter csv(body, {"t", "x", "x0", "branch"});
    for (Branch b : config.wkb.branches) {
      for (double x0 : config.wkb.x0) {
        const auto path = integrate_characteristic(x0, h, diffusion, b, config.wkb.t_end, config.wkb.dt);
        for (std::size_t i = 0; i < path.t.size(); ++i) {
          if (i % config.wkb.stride != 0 && i + 1 != path.t.size()) continue;
          csv.cell(path.t[i]).cell(path.x[i]).cell(x0).cell(to_string(b)).end_row();
        }
      }
    }
    add_csv(out, "wkb_fan_" + std::to_string(k) + ".csv", body.str(), "wkb", config,
            {{"htilde", h}, {"epsilon", config.physics.epsilon}});
  }
  return out;
}

OutputSet run_average(const ExperimentConfig& config) {
  const Trajectory traj = simulate_config(config, config.physics.epsilon);
  std::ostringstream body;
  io::CsvWriter csv(body, {"t", "avg_numeric", "avg_predicted"});
  for (const Field& f : traj.fields) {
    csv.cell(f.time)
        .cell(domain_average(f))
        .cell(average_prediction(f.time, config.physics.x_c0, config.domain.L))
        .end_row();
  }
  OutputSet out;
  add_csv(out, "average.csv", body.str(), "average", config);
  return out;
}

OutputSet run_command(const std::string& name, const ExperimentConfig& config) {
  if (name == "simulate") return run_simulate(config);
  if (name == "compare-sfa") return run_compare_sfa(config);
  if (name == "trap-sweep") return run_trap_sweep(config);
  if (name == "eigen") return run_eigen(config);
  if (name == "wkb") return run_wkb(config);
  if (name == "average") return run_average(config);
  throw std::invalid_argument("unknown command " + name);
}

}  // namespace fkfront::app
