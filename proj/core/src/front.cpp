#include "fkfront/front.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fkfront {

const char* to_string(TransitStatus s) noexcept {
  switch (s) {
    case TransitStatus::transited: return "transited";
    case TransitStatus::never_entered: return "never_entered";
    case TransitStatus::never_exited: return "never_exited";
  }
  return "unknown";
}

const char* to_string(FitMode m) noexcept {
  return m == FitMode::free_exponent ? "free_exponent" : "fixed_exponent";
}

std::optional<double> locate_front(const Field& field, double level) {
  const auto& u = field.values;
  if (u.size() < 2) return std::nullopt;
  // A cell brackets the level when its end values fall on different sides of
  // the half-open split {u >= level} / {u < level}.
  for (std::size_t i = u.size() - 1; i-- > 0;) {
    const bool left_above = u[i] >= level;
    const bool right_above = u[i + 1] >= level;
    if (left_above == right_above) continue;
    const double x0 = field.grid.x(i);
    const double x1 = field.grid.x(i + 1);
    const double frac = (level - u[i]) / (u[i + 1] - u[i]);
    return x0 + frac * (x1 - x0);
  }
  return std::nullopt;
}

FrontPath track_front(const Trajectory& traj, double level) {
  FrontPath path;
  path.level = level;
  path.times.reserve(traj.fields.size());
  path.positions.reserve(traj.fields.size());
  for (const Field& f : traj.fields) {
    path.times.push_back(f.time);
    path.positions.push_back(locate_front(f, level));
  }
  return path;
}

namespace {

struct Interval {
  double lo;
  double hi;
  bool empty() const { return !(lo < hi); }
};

// Sub-interval of s in [0, 1] on which |xa + (xb - xa) s| < r.
Interval inside_window(double xa, double xb, double r) {
  const double slope = xb - xa;
  if (slope == 0.0) {
    return std::abs(xa) < r ? Interval{0.0, 1.0} : Interval{0.0, 0.0};
  }
  double s1 = (-r - xa) / slope;
  double s2 = (r - xa) / slope;
  if (s1 > s2) std::swap(s1, s2);
  return Interval{std::max(0.0, s1), std::min(1.0, s2)};
}

}  // namespace

TrapResult trapping_time(const FrontPath& path, double radius) {
  if (!(radius > 0.0)) {
    throw std::invalid_argument("trapping_time: radius must be positive");
  }
  if (path.times.size() != path.positions.size()) {
    throw std::invalid_argument("trapping_time: times/positions size mismatch");
  }
  TrapResult result;
  const auto& t = path.times;
  const auto& x = path.positions;
  const std::size_t n = t.size();
  bool inside = false;

  for (std::size_t k = 0; k < n; ++k) {
    if (!inside && x[k] && std::abs(*x[k]) < radius) {
      inside = true;
      result.t_enter = t[k];
    }
    if (k + 1 == n) break;

    if (!x[k] || !x[k + 1]) {
      if (inside) {
        // front vanished while inside: treat the missing sample as outside
        result.status = TransitStatus::transited;
        result.t_exit = t[k + 1];
        result.duration = result.t_exit - result.t_enter;
        return result;
      }
      continue;
    }

    const Interval w = inside_window(*x[k], *x[k + 1], radius);
    const double span = t[k + 1] - t[k];
    if (!inside) {
      if (w.empty()) continue;
      inside = true;
      result.t_enter = t[k] + w.lo * span;
    }
    // inside at the start of this segment (or from w.lo on)
    if (w.empty() || w.hi < 1.0) {
      result.status = TransitStatus::transited;
      result.t_exit = w.empty() ? t[k] : t[k] + w.hi * span;
      result.duration = result.t_exit - result.t_enter;
      return result;
    }
  }

  if (inside) {
    result.status = TransitStatus::never_exited;
    result.t_exit = t.back();
    result.duration = t.back() - result.t_enter;
  } else {
    result.status = TransitStatus::never_entered;
  }
  return result;
}

double FitReport::residual_rms() const {
  if (residuals.empty()) return 0.0;
  double acc = 0.0;
  for (double r : residuals) acc += r * r;
  return std::sqrt(acc / static_cast<double>(residuals.size()));
}

FitReport fit_power_law(std::span<const std::pair<double, double>> pairs,
                        FitMode mode, double fixed_exponent) {
  const std::size_t needed = mode == FitMode::free_exponent ? 2 : 1;
  if (pairs.size() < needed) {
    throw std::invalid_argument("fit_power_law: need at least " +
                                std::to_string(needed) + " (epsilon, duration) pairs");
  }
  std::vector<double> lx, ly;
  lx.reserve(pairs.size());
  ly.reserve(pairs.size());
  for (const auto& [eps, dur] : pairs) {
    if (!(eps > 0.0) || !(dur > 0.0) || !std::isfinite(eps) || !std::isfinite(dur)) {
      throw std::invalid_argument("fit_power_law: epsilon and duration must be positive");
    }
    lx.push_back(std::log(eps));
    ly.push_back(std::log(dur));
  }
  const double m = static_cast<double>(lx.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mean_x += lx[i];
    mean_y += ly[i];
  }
  mean_x /= m;
  mean_y /= m;

  FitReport report;
  report.mode = mode;
  double log_amp = 0.0;
  if (mode == FitMode::free_exponent) {
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sxx += (lx[i] - mean_x) * (lx[i] - mean_x);
      sxy += (lx[i] - mean_x) * (ly[i] - mean_y);
    }
    if (!(sxx > 0.0)) {
      throw std::invalid_argument("fit_power_law: epsilons must not all be equal");
    }
    report.exponent = sxy / sxx;
    log_amp = mean_y - report.exponent * mean_x;
  } else {
    report.exponent = fixed_exponent;
    log_amp = mean_y - fixed_exponent * mean_x;
  }
  report.amplitude = std::exp(log_amp);
  for (std::size_t i = 0; i < lx.size(); ++i) {
    report.epsilons.push_back(pairs[i].first);
    report.residuals.push_back(ly[i] - (log_amp + report.exponent * lx[i]));
  }
  return report;
}

}  // namespace fkfront
