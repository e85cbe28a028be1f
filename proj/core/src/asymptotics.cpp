#include "fkfront/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace fkfront {

Snapshot::Snapshot(Field field) : field_(std::move(field)) {
  if (field_.values.size() != field_.grid.size()) {
    throw std::invalid_argument("Snapshot: field size does not match its grid");
  }
}

double Snapshot::operator()(double x) const {
  const Grid& g = field_.grid;
  const auto& u = field_.values;
  const double L = g.half_length();
  if (x <= -L) return u.front();
  if (x >= L) return u.back();
  const double s = (x + L) / g.dx();
  auto i = static_cast<std::size_t>(s);
  if (i >= g.size() - 1) i = g.size() - 2;
  const double frac = (x - g.x(i)) / (g.x(i + 1) - g.x(i));
  return u[i] + frac * (u[i + 1] - u[i]);
}

double sfa_evolve(const Snapshot& snap, double x, double t) {
  const double delta = t - snap.time();
  if (delta < 0.0) throw std::invalid_argument("sfa_evolve: t precedes the snapshot");
  const double u0 = snap(x * std::exp(2.0 * delta));
  if (delta == 0.0) return u0;
  const double growth = std::exp(delta);
  return u0 * growth / (1.0 + u0 * std::expm1(delta));
}

Field sfa_evolve_field(const Snapshot& snap, const Grid& grid, double t) {
  Field out{grid, std::vector<double>(grid.size()), t};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.values[i] = sfa_evolve(snap, grid.x(i), t);
  }
  return out;
}

double sfa_characteristic(double x0, double t0, double t) {
  return x0 * std::exp(-2.0 * (t - t0));
}

double twc_front_path(double x_c_t0, double t0, double t, double speed) {
  if (x_c_t0 == 0.0) {
    throw std::invalid_argument("twc_front_path: x_c(t0) = 0 has no log coordinate");
  }
  return x_c_t0 * std::exp(-speed * (t - t0));
}

const char* to_string(RootKind k) noexcept {
  switch (k) {
    case RootKind::real_distinct: return "real_distinct";
    case RootKind::real_double: return "real_double";
    case RootKind::complex_pair: return "complex_pair";
  }
  return "unknown";
}

RootPair stationary_roots(double c, Branch branch) {
  // lambda^2 - b lambda + 1 = 0 with b the root sum
  const double b = branch == Branch::plus ? c - 1.0 : c + 1.0;
  // b^2 - 4 in factored form, so its sign is exact next to the double roots
  const double disc = branch == Branch::plus ? (c - 3.0) * (c + 1.0) : (c - 1.0) * (c + 3.0);

  RootPair r;
  r.branch = branch;
  r.c = c;
  if (disc > 0.0) {
    r.kind = RootKind::real_distinct;
    const double root = std::sqrt(disc);
    // larger-magnitude root first, the other from the product = 1
    const double big = 0.5 * (b + std::copysign(root, b));
    const double small = 1.0 / big;
    if (b >= 0.0) {
      r.first = big;
      r.second = small;
    } else {
      r.first = small;
      r.second = big;
    }
  } else if (disc == 0.0) {
    r.kind = RootKind::real_double;
    r.first = r.second = 0.5 * b;
  } else {
    r.kind = RootKind::complex_pair;
    const double im = 0.5 * std::sqrt(-disc);
    r.first = {0.5 * b, im};
    r.second = {0.5 * b, -im};
  }
  r.non_oscillatory = branch == Branch::plus ? c < -1.0 : c > 1.0;
  return r;
}

std::pair<double, double> tail_exponents(double c_bar) {
  if (!(c_bar >= 0.75)) {
    throw std::invalid_argument("tail_exponents: need c_bar >= 3/4 for non-oscillatory tails");
  }
  const double half_root = 0.5 * std::sqrt(4.0 * c_bar - 3.0);
  return {-0.5 - half_root, -0.5 + half_root};
}

SfaResidual sfa_residual(const Snapshot& snap, const DiffusionProfile& diffusion,
                         const ReactionTerm& reaction, double t,
                         std::span<const double> probe_x, double h) {
  if (t < snap.time()) throw std::invalid_argument("sfa_residual: t precedes the snapshot");
  if (!(h > 0.0)) throw std::invalid_argument("sfa_residual: h must be positive");

  const auto u = [&](double x, double s) { return sfa_evolve(snap, x, s); };
  const bool central_time = t - h >= snap.time();

  SfaResidual out;
  out.x.assign(probe_x.begin(), probe_x.end());
  out.residual.reserve(probe_x.size());
  out.validity_ratio.reserve(probe_x.size());
  for (double x : probe_x) {
    const double u0 = u(x, t);
    const double up = u(x + h, t);
    const double um = u(x - h, t);
    const double ux = (up - um) / (2.0 * h);
    const double uxx = (up - 2.0 * u0 + um) / (h * h);
    const double ut = central_time
                          ? (u(x, t + h) - u(x, t - h)) / (2.0 * h)
                          : (-3.0 * u0 + 4.0 * u(x, t + h) - u(x, t + 2.0 * h)) / (2.0 * h);
    const double drift = diffusion.aprime(x) * ux;
    out.residual.push_back(ut - drift - reaction.f(u0));
    const double diff = std::abs(diffusion.a(x) * uxx);
    out.validity_ratio.push_back(
        drift != 0.0 ? diff / std::abs(drift)
                     : (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity()));
  }
  return out;
}

}  // namespace fkfront
