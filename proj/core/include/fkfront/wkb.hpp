#pragma once

// Characteristics of the phase equation phi_t + a(x) phi_x^2 + 1 = 0 for the
// tail linearized about u = 0, with a(x) = x^2 + eps.
//
// Along a characteristic the Hamiltonian H = 1 + a p^2 is conserved and
// Htilde = sqrt(H - 1). The branch fixes the direction of travel:
//   plus:  dx/dt = +2 Htilde sqrt(a(x))
//   minus: dx/dt = -2 Htilde sqrt(a(x))
// With s(x) = x + sqrt(x^2 + eps) the flow is s(t) = s(0) e^{+-2 Htilde t}, so
// every closed form below follows from that one relation.

#include <functional>
#include <vector>

#include "fkfront/domain.hpp"

namespace fkfront {

struct WkbParams {
  double htilde = 1.0;
  double epsilon = 0.01;
  Branch branch = Branch::minus;

  /// Throws std::invalid_argument unless htilde > 0 and epsilon > 0.
  void validate() const;
};

/// Starting point x0 of the characteristic that sits at x at time t:
/// x0 = (s e^{-+2Ht} - eps e^{+-2Ht} / s) / 2, upper sign for plus.
double characteristic_label(double x, double t, const WkbParams& params);

/// Exact position at time t of the characteristic labelled x0,
/// sqrt(eps) sinh(asinh(x0 / sqrt(eps)) +- 2 Htilde t).
double characteristic_position(double x0, double t, const WkbParams& params);

/// Leading-order far-field characteristic for |x| >> sqrt(eps), where
/// sqrt(a) ~ |x|: x0 e^{+-2 Htilde t sgn(x0)}. For x0 < 0 the plus branch moves
/// toward the turning point (x0 e^{-2Ht}); for x0 > 0 it moves away (x0 e^{2Ht}).
double outer_characteristic(double x0, double t, double htilde, Branch branch);

struct InnerCharacteristic {
  double x = 0.0;
  /// 1 +- 2 tanh(2Ht) + 2 (x0 / sqrt(eps)) sech(2Ht); negative means the
  /// closed form has left its window of validity.
  double radicand = 0.0;
  bool valid = false;
};

/// Inner-layer form for |x| << sqrt(eps) on O(1) times:
/// x ~ sqrt(eps) (-1 + sqrt(1 +- 2 tanh(2Ht) + 2 (x0/sqrt eps) sech(2Ht))).
/// The tanh sign follows the branch; x0 < 0 with minus and x0 > 0 with plus
/// are the outward-moving cases. x is NaN when valid is false.
InnerCharacteristic inner_characteristic(double x0, double t, const WkbParams& params);

struct CharacteristicPath {
  std::vector<double> t;
  std::vector<double> x;
};

/// Fixed-step RK4 for dx/dt = +-2 Htilde sqrt(a(x)) from x(0) = x0. The last
/// step is shortened to land on t_end. Htilde = 0 is allowed (a still path).
CharacteristicPath integrate_characteristic(double x0, double htilde,
                                            const DiffusionProfile& diffusion,
                                            Branch branch, double t_end, double dt);

struct PhaseValue {
  double phi = 0.0;
  double x0 = 0.0;
};

/// phi(x, t) = (Htilde^2 - 1) t + phi0(x0(x, t)).
PhaseValue phase_along(double x, double t, const WkbParams& params,
                       const std::function<double(double)>& phi0);

/// Initial phase consistent with a single Htilde on the chosen branch:
/// phi0'(x) = +-Htilde / sqrt(a(x)), i.e. phi0(x) = +-Htilde asinh(x / sqrt eps).
/// With it phase_along solves the phase equation exactly.
double consistent_initial_phase(double x, const WkbParams& params);

}  // namespace fkfront
