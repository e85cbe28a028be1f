#pragma once

// Finite-difference integrator for u_t = (a(x) u_x)_x + f(u) on [-L, L] with
// homogeneous Neumann ends: backward Euler for diffusion, forward Euler for
// reaction, conservative second-order stencil in space.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fkfront/domain.hpp"

namespace fkfront {

/// Raised when Thomas elimination meets a zero (or non-finite) pivot.
class SingularSystemError : public std::runtime_error {
 public:
  explicit SingularSystemError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Tridiagonal matrix D with (D u)_i = lower[i] u_{i-1} + diag[i] u_i +
/// upper[i] u_{i+1}. lower[0] and upper[n-1] are stored as zero.
struct TridiagonalOperator {
  std::vector<double> lower;
  std::vector<double> diag;
  std::vector<double> upper;

  std::size_t size() const noexcept { return diag.size(); }

  /// y = D u.
  std::vector<double> apply(std::span<const double> u) const;
};

/// Discretization of (a(x) u_x)_x. Interior rows are
/// [a_{i-1/2}, -(a_{i-1/2} + a_{i+1/2}), a_{i+1/2}] / dx^2 with half-point
/// coefficients a(x_i +- dx/2). End rows come from mirror ghost nodes
/// (u_{-1} = u_1 with the coefficient mirrored as well), giving
/// [-2 a_{1/2}, 2 a_{1/2}] / dx^2 at the left end and its mirror at the right.
/// Rows sum to zero, and W D is symmetric for trapezoid weights W.
TridiagonalOperator build_operator(const Grid& grid,
                                   const DiffusionProfile& diffusion);

/// Solves (I - shift * D) x = rhs by Thomas elimination.
std::vector<double> tridiagonal_solve(const TridiagonalOperator& op,
                                      double shift,
                                      std::span<const double> rhs);

/// Solves the general tridiagonal system with the given diagonals.
std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                      std::span<const double> diag,
                                      std::span<const double> upper,
                                      std::span<const double> rhs);

struct SolverConfig {
  double dt = 0.01;
  double t_end = 20.0;
  std::size_t snapshot_stride = 10;

  /// Throws std::invalid_argument on dt outside (0, 1], t_end < 0,
  /// 0 < t_end < dt, or a zero stride.
  void validate() const;

  /// round(t_end / dt).
  std::size_t step_count() const;
};

/// Fields at t = 0, stride * dt, 2 * stride * dt, ... and the final time.
struct Trajectory {
  SolverConfig config;
  std::vector<Field> fields;

  const Grid& grid() const { return fields.front().grid; }
};

/// One step of (I - dt D) u_{k+1} = u_k + dt f(u_k).
Field imex_step(const Field& field, const TridiagonalOperator& op,
                const ReactionTerm& reaction, double dt);

/// Reusable stepper: factorizes (I - dt D) once and applies it each step.
/// Holds scratch space, so one instance must not be shared across threads.
class ImexStepper {
 public:
  ImexStepper(TridiagonalOperator op, ReactionTerm reaction, double dt);

  double dt() const noexcept { return dt_; }

  /// Advances `values` in place by one step.
  void advance(std::vector<double>& values) const;

 private:
  TridiagonalOperator op_;
  ReactionTerm reaction_;
  double dt_;
  // Thomas factorization of I - dt D.
  std::vector<double> upper_factor_;
  std::vector<double> inv_pivot_;
  mutable std::vector<double> work_;
};

/// Integrates from the step initial condition to config.t_end.
Trajectory simulate(const Grid& grid, const DiffusionProfile& diffusion,
                    const ReactionTerm& reaction, const FrontSpec& front,
                    const SolverConfig& config);

/// Same, from an arbitrary initial field.
Trajectory simulate_from(const Field& initial, const DiffusionProfile& diffusion,
                         const ReactionTerm& reaction,
                         const SolverConfig& config);

}  // namespace fkfront
