#pragma once

// Front location x_c(t) (where u crosses a level), trapping time inside a
// window around the turning point, and power-law fits of trapping times.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fkfront/domain.hpp"
#include "fkfront/solver.hpp"

namespace fkfront {

/// Rightmost level crossing of the piecewise-linear interpolant of `field`,
/// or nullopt if u never crosses `level`.
std::optional<double> locate_front(const Field& field, double level = 0.5);

struct FrontPath {
  std::vector<double> times;
  std::vector<std::optional<double>> positions;
  double level = 0.5;
};

FrontPath track_front(const Trajectory& traj, double level = 0.5);

enum class TransitStatus { transited, never_entered, never_exited };

const char* to_string(TransitStatus s) noexcept;

struct TrapResult {
  TransitStatus status = TransitStatus::never_entered;
  double t_enter = 0.0;
  double t_exit = 0.0;
  /// t_exit - t_enter when transited; time spent inside up to the last sample
  /// (a lower bound) when never_exited; zero otherwise.
  double duration = 0.0;

  bool transited() const noexcept { return status == TransitStatus::transited; }
};

/// Time between the first entry of the linearly interpolated path into
/// |x| < radius and the first subsequent time with |x| >= radius. Samples with
/// no front count as outside the window.
TrapResult trapping_time(const FrontPath& path, double radius = 0.4);

enum class FitMode { free_exponent, fixed_exponent };

const char* to_string(FitMode m) noexcept;

/// duration = amplitude * epsilon^exponent, fitted in log space.
struct FitReport {
  double amplitude = 0.0;
  double exponent = 0.0;
  std::vector<double> residuals;  // log(T_i) - log(C eps_i^p)
  std::vector<double> epsilons;
  FitMode mode = FitMode::free_exponent;

  double residual_rms() const;
};

/// Ordinary least squares of log(duration) against log(epsilon). In
/// fixed-exponent mode only the amplitude is fitted. Throws
/// std::invalid_argument on non-positive data or too few pairs (two in free
/// mode, one in fixed mode).
FitReport fit_power_law(std::span<const std::pair<double, double>> pairs,
                        FitMode mode = FitMode::free_exponent,
                        double fixed_exponent = -0.5);

}  // namespace fkfront
