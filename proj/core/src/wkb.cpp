#include "fkfront/wkb.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fkfront {
namespace {

// x + sqrt(x^2 + eps), evaluated without cancellation for x << 0.
double s_of(double x, double eps) {
  const double r = std::sqrt(x * x + eps);
  return x >= 0.0 ? x + r : eps / (r - x);
}

}  // namespace

void WkbParams::validate() const {
  if (!(htilde > 0.0)) throw std::invalid_argument("WkbParams: Htilde must be positive");
  if (!(epsilon > 0.0)) throw std::invalid_argument("WkbParams: epsilon must be positive");
}

double characteristic_label(double x, double t, const WkbParams& params) {
  const double sgn = branch_sign(params.branch);
  const double s = s_of(x, params.epsilon);
  const double decay = std::exp(-sgn * 2.0 * params.htilde * t);
  const double s0 = s * decay;
  // (s0 - eps / s0) / 2, written to stay accurate when s0 is small
  const double r0 = params.epsilon / s0;
  return 0.5 * (s0 - r0);
}

double characteristic_position(double x0, double t, const WkbParams& params) {
  const double root_eps = std::sqrt(params.epsilon);
  const double theta0 = std::asinh(x0 / root_eps);
  return root_eps *
         std::sinh(theta0 + branch_sign(params.branch) * 2.0 * params.htilde * t);
}

double outer_characteristic(double x0, double t, double htilde, Branch branch) {
  const double direction = x0 < 0.0 ? -1.0 : 1.0;
  return x0 * std::exp(branch_sign(branch) * direction * 2.0 * htilde * t);
}

InnerCharacteristic inner_characteristic(double x0, double t, const WkbParams& params) {
  const double root_eps = std::sqrt(params.epsilon);
  const double tau = 2.0 * params.htilde * t;
  InnerCharacteristic out;
  out.radicand = 1.0 + branch_sign(params.branch) * 2.0 * std::tanh(tau) +
                 2.0 * (x0 / root_eps) / std::cosh(tau);
  out.valid = out.radicand >= 0.0;
  out.x = out.valid ? root_eps * (-1.0 + std::sqrt(out.radicand))
                    : std::numeric_limits<double>::quiet_NaN();
  return out;
}

CharacteristicPath integrate_characteristic(double x0, double htilde,
                                            const DiffusionProfile& diffusion,
                                            Branch branch, double t_end, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("integrate_characteristic: dt must be positive");
  if (!(t_end >= 0.0)) throw std::invalid_argument("integrate_characteristic: t_end must be >= 0");
  if (!(htilde >= 0.0)) throw std::invalid_argument("integrate_characteristic: Htilde must be >= 0");

  const double speed = branch_sign(branch) * 2.0 * htilde;
  const auto rhs = [&](double x) { return speed * std::sqrt(diffusion.a(x)); };

  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-12));
  CharacteristicPath path;
  path.t.reserve(steps + 1);
  path.x.reserve(steps + 1);
  path.t.push_back(0.0);
  path.x.push_back(x0);
  double x = x0;
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t_prev = static_cast<double>(k - 1) * dt;
    const double t_next = (k == steps) ? t_end : static_cast<double>(k) * dt;
    const double h = t_next - t_prev;
    const double k1 = rhs(x);
    const double k2 = rhs(x + 0.5 * h * k1);
    const double k3 = rhs(x + 0.5 * h * k2);
    const double k4 = rhs(x + h * k3);
    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    path.t.push_back(t_next);
    path.x.push_back(x);
  }
  return path;
}

PhaseValue phase_along(double x, double t, const WkbParams& params,
                       const std::function<double(double)>& phi0) {
  PhaseValue v;
  v.x0 = characteristic_label(x, t, params);
  v.phi = (params.htilde * params.htilde - 1.0) * t + phi0(v.x0);
  return v;
}

double consistent_initial_phase(double x, const WkbParams& params) {
  return branch_sign(params.branch) * params.htilde *
         std::asinh(x / std::sqrt(params.epsilon));
}

}  // namespace fkfront
