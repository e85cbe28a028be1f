#pragma once

// Softening of step data: Neumann eigenproblem (a(x) phi')' = lambda phi on
// [-L, L], the slow-time mode amplitudes that remove secular growth, the
// leading-order modal reconstruction, and the domain-average prediction.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fkfront/domain.hpp"

namespace fkfront {

class EigenSolveError : public std::runtime_error {
 public:
  explicit EigenSolveError(const std::string& what) : std::runtime_error(what) {}
};

/// Eigenpairs ordered by descending eigenvalue (lambda_0 = 0 first).
/// Eigenfunctions are sampled on `grid`, normalized to unit trapezoid L2 norm,
/// and signed so that phi_n(-L) > 0.
struct EigenSystem {
  Grid grid;
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenfunctions;

  std::size_t count() const noexcept { return eigenvalues.size(); }

  /// phi_n(x) by linear interpolation of the sampled eigenfunction.
  double value(std::size_t n, double x) const;
  /// phi_n'(x): second-order central differences at the nodes (zero at the
  /// Neumann ends), linearly interpolated to x.
  double derivative(std::size_t n, double x) const;
};

/// Uses the same conservative stencil as the time stepper, symmetrized by the
/// trapezoid weights, so the discrete spectrum is real and the eigenvectors
/// are orthonormal in the trapezoid inner product. Requires modes < grid.size().
EigenSystem solve_eigenproblem(const DiffusionProfile& diffusion, const Grid& grid,
                               std::size_t modes);

/// Initial amplitudes for step data at front.x_c0.
/// sigma_n_init[0] repeats sigma0_init; entries n >= 1 hold sigma_n(0).
struct ModeAmplitudes {
  double sigma0_init = 0.0;
  std::vector<double> sigma_n_init;
  double phi0_const = 0.0;  // sqrt(1 / 2L)
};

/// sigma_0(0) = (x_c + L) / sqrt(2L);
/// sigma_n(0) = a(x_c) phi_n'(x_c) / lambda_n for n >= 1.
ModeAmplitudes initial_amplitudes(const FrontSpec& front, const Grid& grid,
                                  const EigenSystem& eig,
                                  const DiffusionProfile& diffusion);

/// sigma_0(t) = 1 / (phi0 + s e^{-t}), s = 1/sigma_0(0) - phi0; the solution of
/// sigma_0' = sigma_0 (1 - phi0 sigma_0). Throws for sigma_0(0) <= 0.
double sigma0_of_t(double t, const ModeAmplitudes& amp);

/// sigma_n(t) = sigma_n(0) e^t / (1 + sigma_0(0) phi0 (e^t - 1))^2, the solution
/// of sigma_n' = (1 - 2 sigma_0 phi0) sigma_n. Throws for n == 0 or n out of range.
double sigma_n_of_t(double t, std::size_t n, const ModeAmplitudes& amp);

/// u0(x, T, t) = sum_n sigma_n(t) phi_n(x) e^{lambda_n T} over the available
/// modes. T is the fast time t / eps_fast.
double leading_order_field(double x, double fast_time, double t,
                           const EigenSystem& eig, const ModeAmplitudes& amp);

/// leading_order_field with T = t / fast_epsilon.
double leading_order_at(double x, double t, double fast_epsilon,
                        const EigenSystem& eig, const ModeAmplitudes& amp);

/// <u> ~ 1 / (1 + ((L - x_c) / (L + x_c)) e^{-t}). Throws unless -L < x_c < L.
double average_prediction(double t, double x_c, double L);

}  // namespace fkfront
