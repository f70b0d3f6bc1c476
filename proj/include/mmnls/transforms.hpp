#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mmnls/fiber.hpp"

namespace mmnls {

/// Factors of the unitless frame zeta = z / (k1 L_D), t = T / (k2 T0).
/// The normalized domain is zeta in [0, 1], t in [-1/2, 1/2].
struct FrameFactors {
  double k1 = 1.0;      ///< L_max / L_D
  double k2 = 1.0;      ///< T_max / T0
  double l_ref = 0.0;   ///< m, k1 * L_D = L_max
  double t_ref = 0.0;   ///< ps, k2 * T0 = T_max
};

/// Coefficient groups of the normalized coupled-mode equation
///   i dU_p/dzeta + a0_p U_p + i a1_p dU_p/dt + a2 d2U_p/dt2
///     + (a_spm |U_p|^2 + sum_n a_xpm_p[n] |U_n|^2) U_p = 0
/// with a0 = k1*delta_beta0 (optionally scaled), a1 = k1*delta_beta1/k2,
/// a2 = k1*c/k2^2, a_spm = k1*d, a_xpm = k1*d*gamma_c/gamma_s,
/// c = -sign(beta2)/2 and d = L_D/L_NL.
///
/// The transport term carries an explicit i so that the operator stays
/// norm-preserving; without it the a1 group would act as gain/loss.
struct NormalizedSystem {
  struct Mode {
    double a0 = 0.0;
    double a1 = 0.0;
    std::vector<double> a_xpm;  ///< indexed over the *other* modes, in mode order
  };
  std::vector<Mode> modes;
  double a2 = 0.0;
  double a_spm = 0.0;
  double c = 0.0;               ///< -sign(beta2)/2
  double d = 0.0;               ///< L_D / L_NL (0 for a linear run)
  FrameFactors frame;

  std::size_t mode_count() const { return modes.size(); }

  /// a_xpm of mode p against mode n (both 0-based, p != n).
  double xpm(std::size_t p, std::size_t n) const {
    return modes[p].a_xpm[n < p ? n : n - 1];
  }
};

/// Result of the delta_beta0 reduction: scaled = original + (2 pi / z_ref) * l_prime.
struct ScaledBeta0 {
  double original = 0.0;   ///< 1/m
  double scaled = 0.0;     ///< 1/m, |scaled| < 2 * (2 pi / z_ref)
  std::int64_t periods = 0;///< l'
  double z_ref = 0.0;      ///< m
};

FrameFactors frame_factors(double l_max, double l_d, double t_max, double t0);

/// Reduce delta_beta0 by an integer number of 2 pi / z periods.
/// l' = -trunc(delta_beta0 * z / (2 pi)), which cancels the magnitude and
/// guarantees |scaled| < 2 pi / z. The identity
/// scaled - delta_beta0 == (2 pi / z) * l' holds to 1 ulp of the dominant term.
ScaledBeta0 scale_beta0(double delta_beta0, double z);

/// delta_beta0 + (2 pi / z) * l, the solution-preserving shift at coordinate z.
double periodic_shift_equivalence(double delta_beta0, double z, std::int64_t l);

/// Rotate the field computed with delta_beta0 = 0 by phi = -delta_beta0 * z.
/// Exact isometry: returns (re0 cos phi - im0 sin phi, re0 sin phi + im0 cos phi).
std::pair<double, double> restore_phase(double re0, double im0, double delta_beta0, double z);

/// Assemble every coefficient group of the normalized system. When `scaling`
/// is enabled, each a0 uses scale_beta0(delta_beta0, L).scaled.
NormalizedSystem normalized_coefficients(const FiberSpec& fiber, const PulseSpec& pulse,
                                         const FrameFactors& frame, bool scaling);

}  // namespace mmnls
