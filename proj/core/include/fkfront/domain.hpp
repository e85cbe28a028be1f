#pragma once

// Ingredients of u_t = (a(x) u_x)_x + f(u): diffusion profile, reaction term,
// uniform grid, field state and step initial data.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fkfront {

/// Selects one of the two sign branches that appear throughout the
/// characteristic and stationary-reduction formulas.
enum class Branch { plus, minus };

/// +1 for Branch::plus, -1 for Branch::minus.
constexpr double branch_sign(Branch b) noexcept {
  return b == Branch::plus ? 1.0 : -1.0;
}

const char* to_string(Branch b) noexcept;

/// Spatially varying diffusion coefficient a(x) together with its exact
/// derivative. The shipped profile is a(x) = x^2 + epsilon; the callable form
/// leaves room for others (tests use a constant profile as a control).
class DiffusionProfile {
 public:
  using Fn = std::function<double(double)>;

  DiffusionProfile(double epsilon, Fn a, Fn aprime);

  double epsilon() const noexcept { return epsilon_; }
  double a(double x) const { return a_(x); }
  double aprime(double x) const { return aprime_(x); }
  double operator()(double x) const { return a_(x); }

 private:
  double epsilon_;
  Fn a_;
  Fn aprime_;
};

/// a(x) = x^2 + epsilon. Throws std::invalid_argument unless epsilon > 0.
DiffusionProfile make_quadratic_diffusion(double epsilon);

/// a(x) = value everywhere; the constant-coefficient control case.
DiffusionProfile make_constant_diffusion(double value);

/// Reaction term f(u) with f(0) = f(1) = 0, f'(0) = 1, f'(1) < 0.
class ReactionTerm {
 public:
  using Fn = std::function<double(double)>;

  ReactionTerm(Fn f, Fn fprime);

  double f(double u) const { return f_(u); }
  double fprime(double u) const { return fprime_(u); }
  double operator()(double u) const { return f_(u); }

 private:
  Fn f_;
  Fn fprime_;
};

/// f(u) = u(1 - u).
ReactionTerm logistic_reaction();

/// f(u) = 0. Not a KPP nonlinearity; used for pure-diffusion checks.
ReactionTerm zero_reaction();

/// Uniform grid on [-L, L] with n >= 3 nodes.
class Grid {
 public:
  Grid(double half_length, std::size_t nodes);

  /// Grid whose spacing is `spacing` (2L / spacing must be an integer to 1e-9).
  static Grid with_spacing(double half_length, double spacing);

  double half_length() const noexcept { return half_length_; }
  std::size_t size() const noexcept { return nodes_; }
  double dx() const noexcept { return dx_; }

  /// x_i = -L + i dx, with the last node pinned to +L exactly.
  double x(std::size_t i) const noexcept;
  std::vector<double> coordinates() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double half_length_;
  std::size_t nodes_;
  double dx_;
};

struct Field {
  Grid grid;
  std::vector<double> values;
  double time = 0.0;
};

/// Step location and tracking level (u(x_c(t), t) = level).
struct FrontSpec {
  double x_c0 = -35.0;
  double level = 0.5;
};

/// u = 1 where x_i <= x_c0 and 0 elsewhere, at t = 0. Throws
/// std::invalid_argument if x_c0 is not inside (-L, L).
Field step_initial_condition(const Grid& grid, const FrontSpec& front);

/// Composite trapezoid weights for the grid (dx/2 at the ends, dx inside).
std::vector<double> trapezoid_weights(const Grid& grid);

/// Trapezoid approximation of the integral over [-L, L].
double trapezoid_integral(const Grid& grid, std::span<const double> values);

/// (1 / 2L) * integral of u over [-L, L].
double domain_average(const Field& field);

}  // namespace fkfront
