#pragma once

// Closed-form front predictions for a(x) = x^2 + eps with logistic reaction:
// soft-front evolution along u_t = a'(x) u_x + f(u), the log-coordinate front
// path, and the linear analysis of the stationary reduction past the turning
// point.

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "fkfront/domain.hpp"

namespace fkfront {

/// A field frozen at time t0, read back through piecewise-linear
/// interpolation with constant extrapolation beyond either end.
class Snapshot {
 public:
  explicit Snapshot(Field field);

  double time() const noexcept { return field_.time; }
  const Field& field() const noexcept { return field_; }
  double operator()(double x) const;

 private:
  Field field_;
};

/// u(x, t) = u0 e^D / (1 + u0 (e^D - 1)) with D = t - t0 and
/// u0 = snap(x e^{2D}). Meaningful for x < 0 away from the turning point.
/// Throws std::invalid_argument for t < t0.
double sfa_evolve(const Snapshot& snap, double x, double t);

/// sfa_evolve over every node of `grid`.
Field sfa_evolve_field(const Snapshot& snap, const Grid& grid, double t);

/// x0 e^{-2 (t - t0)}.
double sfa_characteristic(double x0, double t0, double t);

/// Solution of ln|x(t)| + speed (t - t0) = ln|x_c(t0)|, keeping the sign of
/// x_c(t0). Throws std::invalid_argument for x_c(t0) == 0.
double twc_front_path(double x_c_t0, double t0, double t, double speed = 2.0);

enum class RootKind { real_distinct, real_double, complex_pair };

const char* to_string(RootKind k) noexcept;

/// Roots of lambda^2 + (-c +- 1) lambda + 1 = 0 (plus branch: -c + 1).
struct RootPair {
  Branch branch = Branch::plus;
  double c = 0.0;
  std::complex<double> first;   // the "+ sqrt" root
  std::complex<double> second;  // the "- sqrt" root
  RootKind kind = RootKind::real_distinct;
  /// c < -1 on the plus branch, c > 1 on the minus branch.
  bool non_oscillatory = false;

  std::complex<double> product() const { return first * second; }
  std::complex<double> sum() const { return first + second; }
};

RootPair stationary_roots(double c, Branch branch);

/// -1/2 -+ sqrt(4 c_bar - 3) / 2 (smaller first). Throws
/// std::invalid_argument for c_bar < 3/4.
std::pair<double, double> tail_exponents(double c_bar);

struct SfaResidual {
  std::vector<double> x;
  /// u_t - a'(x) u_x - f(u) for the sfa_evolve field, central differences.
  std::vector<double> residual;
  /// |a u_xx| / |a' u_x|; the soft-front regime needs this << 1.
  std::vector<double> validity_ratio;
};

/// Probes sfa_evolve(snap, ., .) at time t on the points `probe_x` using
/// central differences of width h in x and t. At t == t0 the time derivative
/// is one-sided forward (second order). Throws std::invalid_argument for
/// t < t0 or h <= 0.
SfaResidual sfa_residual(const Snapshot& snap, const DiffusionProfile& diffusion,
                         const ReactionTerm& reaction, double t,
                         std::span<const double> probe_x, double h);

}  // namespace fkfront
