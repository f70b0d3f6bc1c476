#pragma once

#include <complex>
#include <vector>

#include "mmnls/transforms.hpp"

namespace mmnls {

/// Point query for the closed-form linear solutions (physical units).
struct AnalyticQuery {
  double z = 0.0;           ///< m
  double t = 0.0;           ///< ps
  double t0 = 1.0;          ///< ps
  double beta2 = 0.0;       ///< ps^2/m
  double delta_beta0 = 0.0; ///< 1/m (0 for the single-mode case)
};

/// Dispersing Gaussian, T0/sqrt(T0^2 - i beta2 z) * exp(-T^2/(2(T0^2 - i beta2 z))).
/// Principal branch of the complex square root; the radicand has positive real
/// part for every z, so the branch is continuous along the fiber.
std::complex<double> linear_single_mode(const AnalyticQuery& q);

/// exp(-i delta_beta0 z) times the single-mode solution; the magnitude is
/// independent of delta_beta0.
std::complex<double> linear_multimode(const AnalyticQuery& q);

/// Spectrum of the unit-peak Gaussian input, T0 * exp(-T0^2 w^2 / 2).
double gaussian_spectrum(double omega, double t0);

/// Closed-form solution of the *normalized* linear system for mode p:
///   U_p(zeta, t) = sqrt(split_p) exp(i a0_p zeta) N(zeta, t - a1_p zeta)
/// where N is the dispersing Gaussian with half-width 1/k2 and effective
/// dispersion -2 a2. This is the function the PDE operator of the normalized
/// system annihilates exactly.
std::complex<double> normalized_linear_mode(const NormalizedSystem& sys, std::size_t mode,
                                            double split, double zeta, double t);

/// Probe layout for the finite-difference residual check.
struct ResidualProbe {
  int n_zeta = 64;
  int n_t = 64;
  double zeta_lo = 0.05;
  double zeta_hi = 0.95;
  double t_halfspan = 0.0;   ///< 0 = auto (3 pulse widths plus transport)
  double h_zeta = 1e-2;      ///< FD step in zeta
  double h_t = 0.0;          ///< 0 = auto (pulse width / 20)
};

/// Evaluates the normalized PDE operator (coefficients `op`) on the analytic
/// solution of the system `solution_of` using 4th-order central differences,
/// and returns the maximum residual magnitude over the probe grid. Passing the
/// same system for both arguments checks that the operator was assembled with
/// the correct signs; passing a tampered `op` gives a negative control.
double normalized_residual_of_analytic(const NormalizedSystem& op,
                                       const NormalizedSystem& solution_of,
                                       const std::vector<double>& split,
                                       const ResidualProbe& probe = {});

inline double normalized_residual_of_analytic(const NormalizedSystem& coeffs,
                                              const std::vector<double>& split,
                                              const ResidualProbe& probe = {}) {
  return normalized_residual_of_analytic(coeffs, coeffs, split, probe);
}

}  // namespace mmnls
