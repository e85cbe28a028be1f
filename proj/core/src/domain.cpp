#include "fkfront/domain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace fkfront {

const char* to_string(Branch b) noexcept {
  return b == Branch::plus ? "plus" : "minus";
}

DiffusionProfile::DiffusionProfile(double epsilon, Fn a, Fn aprime)
    : epsilon_(epsilon), a_(std::move(a)), aprime_(std::move(aprime)) {
  if (!a_ || !aprime_) {
    throw std::invalid_argument("DiffusionProfile: a and aprime must be callable");
  }
}

DiffusionProfile make_quadratic_diffusion(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument(
        "diffusion floor epsilon must be positive and finite, got " +
        std::to_string(epsilon));
  }
  return DiffusionProfile(
      epsilon, [epsilon](double x) { return x * x + epsilon; },
      [](double x) { return 2.0 * x; });
}

DiffusionProfile make_constant_diffusion(double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument("constant diffusion must be positive and finite");
  }
  return DiffusionProfile(
      value, [value](double) { return value; }, [](double) { return 0.0; });
}

ReactionTerm::ReactionTerm(Fn f, Fn fprime)
    : f_(std::move(f)), fprime_(std::move(fprime)) {
  if (!f_ || !fprime_) {
    throw std::invalid_argument("ReactionTerm: f and fprime must be callable");
  }
}

ReactionTerm logistic_reaction() {
  return ReactionTerm([](double u) { return u * (1.0 - u); },
                      [](double u) { return 1.0 - 2.0 * u; });
}

ReactionTerm zero_reaction() {
  return ReactionTerm([](double) { return 0.0; }, [](double) { return 0.0; });
}

Grid::Grid(double half_length, std::size_t nodes)
    : half_length_(half_length), nodes_(nodes), dx_(0.0) {
  if (!(half_length > 0.0) || !std::isfinite(half_length)) {
    throw std::invalid_argument("grid half-length L must be positive and finite");
  }
  if (nodes < 3) {
    throw std::invalid_argument("grid needs at least 3 nodes, got " +
                                std::to_string(nodes));
  }
  dx_ = 2.0 * half_length / static_cast<double>(nodes - 1);
}

Grid Grid::with_spacing(double half_length, double spacing) {
  if (!(spacing > 0.0)) {
    throw std::invalid_argument("grid spacing must be positive");
  }
  const double cells = 2.0 * half_length / spacing;
  const double rounded = std::round(cells);
  if (std::abs(cells - rounded) > 1e-9 * std::max(1.0, cells)) {
    throw std::invalid_argument("2L / dx must be an integer number of cells");
  }
  return Grid(half_length, static_cast<std::size_t>(rounded) + 1);
}

double Grid::x(std::size_t i) const noexcept {
  if (i + 1 == nodes_) return half_length_;
  return -half_length_ + static_cast<double>(i) * dx_;
}

std::vector<double> Grid::coordinates() const {
  std::vector<double> xs(nodes_);
  for (std::size_t i = 0; i < nodes_; ++i) xs[i] = x(i);
  return xs;
}

Field step_initial_condition(const Grid& grid, const FrontSpec& front) {
  const double L = grid.half_length();
  if (!(front.x_c0 > -L && front.x_c0 < L)) {
    throw std::invalid_argument("step location x_c0 must lie inside (-L, L)");
  }
  Field field{grid, std::vector<double>(grid.size(), 0.0), 0.0};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    // closed at equality: a node sitting on the step is occupied
    if (grid.x(i) <= front.x_c0) field.values[i] = 1.0;
  }
  return field;
}

std::vector<double> trapezoid_weights(const Grid& grid) {
  std::vector<double> w(grid.size(), grid.dx());
  w.front() = 0.5 * grid.dx();
  w.back() = 0.5 * grid.dx();
  return w;
}

double trapezoid_integral(const Grid& grid, std::span<const double> values) {
  if (values.size() != grid.size()) {
    throw std::invalid_argument("trapezoid_integral: size mismatch");
  }
  double interior = 0.0;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) interior += values[i];
  return grid.dx() * (interior + 0.5 * (values.front() + values.back()));
}

double domain_average(const Field& field) {
  return trapezoid_integral(field.grid, field.values) /
         (2.0 * field.grid.half_length());
}

}  // namespace fkfront
