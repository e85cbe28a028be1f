#include "fkfront/solver.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace fkfront {
namespace {

constexpr double kPivotFloor = 1e-300;

void check_pivot(double pivot, std::size_t row) {
  if (!std::isfinite(pivot) || std::abs(pivot) < kPivotFloor) {
    throw SingularSystemError("tridiagonal elimination: zero pivot at row " +
                              std::to_string(row));
  }
}

// Row i of D u in flux form, lower (u_{i-1} - u_i) + upper (u_{i+1} - u_i) plus
// the row-sum remainder. Rows built by build_operator sum to exactly zero, so
// constants map to exactly zero.
double apply_row(const TridiagonalOperator& op, std::span<const double> u, std::size_t i) {
  const std::size_t n = u.size();
  const double lo = i > 0 ? op.lower[i] : 0.0;
  const double up = i + 1 < n ? op.upper[i] : 0.0;
  double acc = ((lo + up) + op.diag[i]) * u[i];
  if (i > 0) acc += lo * (u[i - 1] - u[i]);
  if (i + 1 < n) acc += up * (u[i + 1] - u[i]);
  return acc;
}

}  // namespace

std::vector<double> TridiagonalOperator::apply(std::span<const double> u) const {
  const std::size_t n = size();
  if (u.size() != n) {
    throw std::invalid_argument("TridiagonalOperator::apply: size mismatch");
  }
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = apply_row(*this, u, i);
  return y;
}

TridiagonalOperator build_operator(const Grid& grid,
                                   const DiffusionProfile& diffusion) {
  const std::size_t n = grid.size();
  if (n < 3) throw std::invalid_argument("build_operator: need n >= 3");
  const double dx = grid.dx();
  const double inv_dx2 = 1.0 / (dx * dx);

  // a at x_i + dx/2, i = 0..n-2
  std::vector<double> a_half(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    a_half[i] = diffusion.a(grid.x(i) + 0.5 * dx);
  }

  TridiagonalOperator op;
  op.lower.assign(n, 0.0);
  op.diag.assign(n, 0.0);
  op.upper.assign(n, 0.0);

  op.upper[0] = 2.0 * a_half[0] * inv_dx2;
  op.diag[0] = -op.upper[0];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    op.lower[i] = a_half[i - 1] * inv_dx2;
    op.upper[i] = a_half[i] * inv_dx2;
    op.diag[i] = -(op.lower[i] + op.upper[i]);
  }
  op.lower[n - 1] = 2.0 * a_half[n - 2] * inv_dx2;
  op.diag[n - 1] = -op.lower[n - 1];
  return op;
}

std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                      std::span<const double> diag,
                                      std::span<const double> upper,
                                      std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (lower.size() != n || upper.size() != n || rhs.size() != n || n == 0) {
    throw std::invalid_argument("solve_tridiagonal: diagonal size mismatch");
  }
  std::vector<double> c(n), x(n);
  check_pivot(diag[0], 0);
  c[0] = upper[0] / diag[0];
  x[0] = rhs[0] / diag[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double pivot = diag[i] - lower[i] * c[i - 1];
    check_pivot(pivot, i);
    c[i] = (i + 1 < n) ? upper[i] / pivot : 0.0;
    x[i] = (rhs[i] - lower[i] * x[i - 1]) / pivot;
  }
  for (std::size_t i = n - 1; i-- > 0;) x[i] -= c[i] * x[i + 1];
  return x;
}

std::vector<double> tridiagonal_solve(const TridiagonalOperator& op, double shift,
                                      std::span<const double> rhs) {
  const std::size_t n = op.size();
  std::vector<double> lower(n), diag(n), upper(n);
  for (std::size_t i = 0; i < n; ++i) {
    lower[i] = -shift * op.lower[i];
    diag[i] = 1.0 - shift * op.diag[i];
    upper[i] = -shift * op.upper[i];
  }
  return solve_tridiagonal(lower, diag, upper, rhs);
}

void SolverConfig::validate() const {
  if (!(dt > 0.0) || !(dt <= 1.0)) {
    throw std::invalid_argument(
        "dt must lie in (0, 1] so the explicit logistic update keeps [0, 1] "
        "invariant");
  }
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw std::invalid_argument("t_end must be finite and non-negative");
  }
  if (t_end > 0.0 && t_end < dt) {
    throw std::invalid_argument("t_end must be 0 or at least dt");
  }
  if (snapshot_stride == 0) {
    throw std::invalid_argument("snapshot_stride must be positive");
  }
}

std::size_t SolverConfig::step_count() const {
  return static_cast<std::size_t>(std::llround(t_end / dt));
}

ImexStepper::ImexStepper(TridiagonalOperator op, ReactionTerm reaction, double dt)
    : op_(std::move(op)), reaction_(std::move(reaction)), dt_(dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("ImexStepper: dt must be positive");
  const std::size_t n = op_.size();
  upper_factor_.resize(n);
  inv_pivot_.resize(n);
  work_.resize(n);
  double prev_c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = -dt_ * op_.lower[i];
    const double b = 1.0 - dt_ * op_.diag[i];
    const double c = -dt_ * op_.upper[i];
    const double pivot = (i == 0) ? b : b - a * prev_c;
    check_pivot(pivot, i);
    inv_pivot_[i] = 1.0 / pivot;
    upper_factor_[i] = c * inv_pivot_[i];
    prev_c = upper_factor_[i];
  }
}

void ImexStepper::advance(std::vector<double>& values) const {
  const std::size_t n = op_.size();
  if (values.size() != n) {
    throw std::invalid_argument("ImexStepper::advance: size mismatch");
  }
  // increment form: (I - dt D) du = dt (D u + f(u)), u += du
  std::vector<double>& d = work_;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = dt_ * (apply_row(op_, values, i) + reaction_.f(values[i]));
  }
  d[0] *= inv_pivot_[0];
  for (std::size_t i = 1; i < n; ++i) {
    d[i] = (d[i] + dt_ * op_.lower[i] * d[i - 1]) * inv_pivot_[i];
  }
  for (std::size_t i = n - 1; i-- > 0;) d[i] -= upper_factor_[i] * d[i + 1];
  for (std::size_t i = 0; i < n; ++i) values[i] += d[i];
}

Field imex_step(const Field& field, const TridiagonalOperator& op,
                const ReactionTerm& reaction, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("imex_step: dt must be positive");
  if (field.values.size() != op.size()) {
    throw std::invalid_argument("imex_step: field and operator sizes differ");
  }
  const std::span<const double> u = field.values;
  std::vector<double> rhs(u.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    rhs[i] = dt * (apply_row(op, u, i) + reaction.f(u[i]));
  }
  std::vector<double> next = tridiagonal_solve(op, dt, rhs);
  for (std::size_t i = 0; i < next.size(); ++i) next[i] += u[i];
  return Field{field.grid, std::move(next), field.time + dt};
}

Trajectory simulate_from(const Field& initial, const DiffusionProfile& diffusion,
                         const ReactionTerm& reaction,
                         const SolverConfig& config) {
  config.validate();
  if (initial.values.size() != initial.grid.size()) {
    throw std::invalid_argument("initial field size does not match its grid");
  }
  Trajectory traj{config, {}};
  const std::size_t steps = config.step_count();
  traj.fields.reserve(steps / config.snapshot_stride + 2);
  traj.fields.push_back(initial);
  if (steps == 0) return traj;

  const ImexStepper stepper(build_operator(initial.grid, diffusion), reaction,
                            config.dt);
  std::vector<double> u = initial.values;
  for (std::size_t k = 1; k <= steps; ++k) {
    stepper.advance(u);
    if (k % config.snapshot_stride == 0 || k == steps) {
      traj.fields.push_back(
          Field{initial.grid, u, initial.time + static_cast<double>(k) * config.dt});
    }
  }
  return traj;
}

Trajectory simulate(const Grid& grid, const DiffusionProfile& diffusion,
                    const ReactionTerm& reaction, const FrontSpec& front,
                    const SolverConfig& config) {
  return simulate_from(step_initial_condition(grid, front), diffusion, reaction,
                       config);
}

}  // namespace fkfront
