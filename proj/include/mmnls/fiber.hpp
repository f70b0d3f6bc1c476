#pragma once

#include <vector>

namespace mmnls {

// Units are fixed throughout: meters, picoseconds, watts, nanojoules.
// All conversions happen when a configuration is parsed; no unit tags at runtime.

/// Per-mode coefficients of the coupled-mode propagation equation.
/// Offsets delta_beta0/delta_beta1 are relative to mode 1, so the fundamental
/// mode carries zeros for both.
struct ModeParams {
  int mode_index = 1;               ///< 1-based position in the mode list
  double delta_beta0 = 0.0;         ///< 1/m
  double delta_beta1 = 0.0;         ///< ps/m
  double beta2 = 0.0;               ///< ps^2/m
  double gamma_s = 0.0;             ///< 1/(W m), self-phase coefficient
  std::vector<double> gamma_c;      ///< 1/(W m), cross-phase vs every other mode (size P-1)
};

struct FiberSpec {
  double length = 0.0;              ///< m
  double wavelength = 1030.0;       ///< nm (descriptive; not used numerically)
  std::vector<ModeParams> modes;

  std::size_t mode_count() const { return modes.size(); }
  void validate() const;            ///< throws std::invalid_argument on bad invariants
};

struct PulseSpec {
  double energy = 0.0;              ///< nJ, total across modes
  double half_width = 0.0;          ///< ps (T0)
  double peak_power = 0.0;          ///< W, derived from energy unless set explicitly
  double time_window = 0.0;         ///< ps (T_max)
  std::vector<double> energy_split; ///< fraction per mode, sums to 1

  void validate(std::size_t n_modes) const;
};

struct CharacteristicLengths {
  double dispersion_length = 0.0;   ///< m
  double nonlinear_length = 0.0;    ///< m (+inf in the linear regime)
  double max_trainable = 0.0;       ///< m, advisory bound
};

/// L_D = T0^2 / |beta2|. Throws std::domain_error when beta2 == 0 (no
/// dispersion scale; the caller must supply an explicit normalization length).
double dispersion_length(double t0, double beta2);

/// L_NL = 1 / (gamma * P0). Returns +infinity when gamma * P0 == 0, which
/// callers treat as the linear regime.
double nonlinear_length(double gamma, double p0);

/// Peak power in watts of a Gaussian pulse sqrt(P0) * exp(-T^2 / (2 T0^2))
/// carrying total energy E: P0 = E / (sqrt(pi) * T0), with the nJ/ps -> W
/// factor folded in. Total pulse energy, before any per-mode split.
double peak_power(double energy_nj, double t0_ps);

/// Unit-peak Gaussian envelope exp(-T^2 / (2 T0^2)).
double gaussian_pulse(double t, double t0);

/// Full width at half maximum, 2 sqrt(ln 2) * T0.
double fwhm(double t0);

/// Advisory upper bound on the trainable fiber length, min(50 L_D, 50 L_NL).
double max_trainable_length(const CharacteristicLengths& lengths);

/// Convenience: all characteristic lengths for one fiber/pulse pairing.
/// gamma is the self-phase coefficient used for the nonlinear scale.
CharacteristicLengths characteristic_lengths(double t0, double beta2, double gamma, double p0);

}  // namespace mmnls
