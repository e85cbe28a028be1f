#include "fkfront/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "fkfront/solver.hpp"

namespace fkfront {
namespace {

// Cell index i with x_i <= x <= x_{i+1} (clamped) and the fraction within it.
std::pair<std::size_t, double> locate_cell(const Grid& g, double x) {
  const double L = g.half_length();
  if (x <= -L) return {0, 0.0};
  if (x >= L) return {g.size() - 2, 1.0};
  auto i = static_cast<std::size_t>((x + L) / g.dx());
  if (i >= g.size() - 1) i = g.size() - 2;
  return {i, (x - g.x(i)) / (g.x(i + 1) - g.x(i))};
}

}  // namespace

double EigenSystem::value(std::size_t n, double x) const {
  const auto& phi = eigenfunctions.at(n);
  const auto [i, frac] = locate_cell(grid, x);
  return phi[i] + frac * (phi[i + 1] - phi[i]);
}

double EigenSystem::derivative(std::size_t n, double x) const {
  const auto& phi = eigenfunctions.at(n);
  const std::size_t last = grid.size() - 1;
  const auto nodal = [&](std::size_t i) {
    if (i == 0 || i == last) return 0.0;
    return (phi[i + 1] - phi[i - 1]) / (2.0 * grid.dx());
  };
  const auto [i, frac] = locate_cell(grid, x);
  return nodal(i) + frac * (nodal(i + 1) - nodal(i));
}

EigenSystem solve_eigenproblem(const DiffusionProfile& diffusion, const Grid& grid,
                               std::size_t modes) {
  const std::size_t n = grid.size();
  if (modes == 0 || modes >= n) {
    throw std::invalid_argument("solve_eigenproblem: need 0 < modes < grid size");
  }
  const TridiagonalOperator op = build_operator(grid, diffusion);
  const std::vector<double> w = trapezoid_weights(grid);

  // S = W^{1/2} D W^{-1/2} is symmetric because W D is.
  Eigen::VectorXd diag(n);
  Eigen::VectorXd offdiag(n - 1);
  for (std::size_t i = 0; i < n; ++i) diag(static_cast<Eigen::Index>(i)) = op.diag[i];
  for (std::size_t i = 0; i + 1 < n; ++i) {
    offdiag(static_cast<Eigen::Index>(i)) = std::sqrt(op.upper[i] * op.lower[i + 1]);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw EigenSolveError("symmetric tridiagonal eigen-iteration did not converge");
  }

  const auto& values = solver.eigenvalues();  // ascending
  const auto& vectors = solver.eigenvectors();

  EigenSystem eig{grid, {}, {}};
  eig.eigenvalues.reserve(modes);
  eig.eigenfunctions.reserve(modes);
  for (std::size_t k = 0; k < modes; ++k) {
    const auto col = static_cast<Eigen::Index>(n - 1 - k);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = vectors(static_cast<Eigen::Index>(i), col);

    std::vector<double> phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = v[i] / std::sqrt(w[i]);

    // Rayleigh quotient in flux form, phi^T W D phi = -sum a_{i+1/2} (dphi)^2 / dx,
    // which avoids the cancellation in v^T S v (exact for the null mode).
    double energy = 0.0, mass = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      mass += w[i] * phi[i] * phi[i];
      if (i + 1 < n) {
        const double jump = phi[i + 1] - phi[i];
        energy += op.upper[i] * w[i] * jump * jump;
      }
    }
    double lambda = -energy / mass;
    if (!std::isfinite(lambda)) lambda = values(col);

    const double scale = 1.0 / std::sqrt(mass);
    // sign convention: first clearly nonzero sample positive
    double lead = 0.0;
    for (double p : phi) {
      if (std::abs(p) > 1e-12) {
        lead = p;
        break;
      }
    }
    const double sign = lead < 0.0 ? -1.0 : 1.0;
    for (double& p : phi) p *= sign * scale;

    eig.eigenvalues.push_back(lambda);
    eig.eigenfunctions.push_back(std::move(phi));
  }
  return eig;
}

ModeAmplitudes initial_amplitudes(const FrontSpec& front, const Grid& grid,
                                  const EigenSystem& eig,
                                  const DiffusionProfile& diffusion) {
  const double L = grid.half_length();
  if (!(front.x_c0 > -L && front.x_c0 < L)) {
    throw std::invalid_argument("initial_amplitudes: x_c must lie inside (-L, L)");
  }
  ModeAmplitudes amp;
  amp.phi0_const = std::sqrt(1.0 / (2.0 * L));
  amp.sigma0_init = (front.x_c0 + L) / std::sqrt(2.0 * L);
  amp.sigma_n_init.assign(eig.count(), 0.0);
  if (!amp.sigma_n_init.empty()) amp.sigma_n_init[0] = amp.sigma0_init;
  const double a_c = diffusion.a(front.x_c0);
  for (std::size_t n = 1; n < eig.count(); ++n) {
    const double lambda = eig.eigenvalues[n];
    if (lambda == 0.0) {
      throw std::invalid_argument("initial_amplitudes: zero eigenvalue beyond mode 0");
    }
    amp.sigma_n_init[n] = a_c * eig.derivative(n, front.x_c0) / lambda;
  }
  return amp;
}

double sigma0_of_t(double t, const ModeAmplitudes& amp) {
  if (!(amp.sigma0_init > 0.0)) {
    throw std::invalid_argument("sigma0_of_t: sigma_0(0) must be positive");
  }
  const double tilde = -amp.phi0_const + 1.0 / amp.sigma0_init;
  return 1.0 / (amp.phi0_const + tilde * std::exp(-t));
}

double sigma_n_of_t(double t, std::size_t n, const ModeAmplitudes& amp) {
  if (n == 0) throw std::invalid_argument("sigma_n_of_t: n must be >= 1");
  if (n >= amp.sigma_n_init.size()) throw std::out_of_range("sigma_n_of_t: no such mode");
  const double q = amp.sigma0_init * amp.phi0_const;
  const double denom = 1.0 + q * std::expm1(t);
  return amp.sigma_n_init[n] * std::exp(t) / (denom * denom);
}

double leading_order_field(double x, double fast_time, double t,
                           const EigenSystem& eig, const ModeAmplitudes& amp) {
  if (!(fast_time >= 0.0)) {
    throw std::invalid_argument("leading_order_field: fast time must be >= 0");
  }
  if (eig.count() == 0) return 0.0;
  double u = sigma0_of_t(t, amp) * eig.value(0, x);
  const std::size_t modes = std::min(eig.count(), amp.sigma_n_init.size());
  for (std::size_t n = 1; n < modes; ++n) {
    const double decay = std::exp(eig.eigenvalues[n] * fast_time);
    if (decay == 0.0) continue;
    u += sigma_n_of_t(t, n, amp) * eig.value(n, x) * decay;
  }
  return u;
}

double leading_order_at(double x, double t, double fast_epsilon,
                        const EigenSystem& eig, const ModeAmplitudes& amp) {
  if (!(fast_epsilon > 0.0)) {
    throw std::invalid_argument("leading_order_at: fast epsilon must be positive");
  }
  return leading_order_field(x, t / fast_epsilon, t, eig, amp);
}

double average_prediction(double t, double x_c, double L) {
  if (!(L > 0.0) || !(x_c > -L && x_c < L)) {
    throw std::invalid_argument("average_prediction: need -L < x_c < L");
  }
  const double occupied = L + x_c;
  const double empty = L - x_c;
  return occupied / (occupied + empty * std::exp(-t));
}

}  // namespace fkfront
