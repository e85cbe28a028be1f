#pragma once

// The experiment commands. Each one is a pure computation from a validated
// config to a staged OutputSet; nothing touches the filesystem until the
// caller commits the set.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fkfront/asymptotics.hpp"
#include "fkfront/front.hpp"
#include "fkfront/solver.hpp"
#include "fkfront_app/config.hpp"
#include "fkfront_app/output.hpp"

namespace fkfront::app {

/// Trajectory and front path for the configured run.
OutputSet run_simulate(const ExperimentConfig& config);

/// Rightmost x where sfa_evolve(initial, x, t) crosses `level`: bracketed on
/// the grid nodes, then bisected on the continuous prediction.
std::optional<double> sfa_front(const Snapshot& initial, const Grid& grid, double t,
                                double level);

struct SfaComparisonRow {
  double t = 0.0;
  std::optional<double> xc_numeric;
  std::optional<double> xc_sfa;
  std::optional<double> abs_diff;
};

/// Numerical front against sfa_front of the initial field of `traj`
/// (t0 = initial time).
std::vector<SfaComparisonRow> compare_sfa_rows(const Trajectory& traj, double level);

OutputSet run_compare_sfa(const ExperimentConfig& config);

struct SweepEntry {
  double epsilon = 0.0;
  TrapResult trap;
};

/// Distinct epsilons in first-seen order; duplicates are reported through
/// `duplicates` when given.
std::vector<double> distinct_epsilons(const std::vector<double>& epsilons,
                                      std::vector<double>* duplicates = nullptr);

/// One simulation per epsilon on up to `workers` threads. Results are in the
/// order of `epsilons` regardless of scheduling.
std::vector<SweepEntry> sweep_trap_times(const ExperimentConfig& config,
                                         const std::vector<double>& epsilons,
                                         std::size_t workers);

OutputSet run_trap_sweep(const ExperimentConfig& config);
OutputSet run_eigen(const ExperimentConfig& config);
OutputSet run_wkb(const ExperimentConfig& config);
OutputSet run_average(const ExperimentConfig& config);

/// Dispatch by subcommand name; throws std::invalid_argument for unknown names.
OutputSet run_command(const std::string& name, const ExperimentConfig& config);

}  // namespace fkfront::app
