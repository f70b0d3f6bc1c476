#include "mmnls/fiber.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mmnls {

void FiberSpec::validate() const {
  if (length <= 0.0) throw std::invalid_argument("fiber.length must be > 0");
  if (modes.empty()) throw std::invalid_argument("fiber.modes must be non-empty");
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const ModeParams& m = modes[i];
    if (m.mode_index != static_cast<int>(i) + 1)
      throw std::invalid_argument("fiber.modes must be indexed 1..P consecutively");
    if (m.gamma_s < 0.0) throw std::invalid_argument("gamma_s must be >= 0");
    if (m.gamma_c.size() != modes.size() - 1)
      throw std::invalid_argument("gamma_c must have exactly P-1 entries (mode " +
                                  std::to_string(m.mode_index) + ")");
    for (double g : m.gamma_c)
      if (g < 0.0) throw std::invalid_argument("gamma_c entries must be >= 0");
  }
  const ModeParams& fundamental = modes.front();
  if (fundamental.delta_beta0 != 0.0 || fundamental.delta_beta1 != 0.0)
    throw std::invalid_argument("mode 1 must have delta_beta0 = delta_beta1 = 0");
}

void PulseSpec::validate(std::size_t n_modes) const {
  if (half_width <= 0.0) throw std::invalid_argument("pulse.half_width must be > 0");
  if (time_window <= 0.0) throw std::invalid_argument("pulse.time_window must be > 0");
  if (peak_power <= 0.0) throw std::invalid_argument("pulse.peak_power must be > 0");
  if (energy_split.size() != n_modes)
    throw std::invalid_argument("pulse.energy_split must have one entry per mode");
  double sum = 0.0;
  for (double s : energy_split) {
    if (s < 0.0) throw std::invalid_argument("energy_split entries must be >= 0");
    sum += s;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("energy_split must sum to 1");
}

double dispersion_length(double t0, double beta2) {
  if (t0 <= 0.0) throw std::domain_error("dispersion_length: T0 must be > 0");
  if (beta2 == 0.0) throw std::domain_error("dispersion_length: no dispersion scale (beta2 = 0)");
  return t0 * t0 / std::abs(beta2);
}

double nonlinear_length(double gamma, double p0) {
  if (gamma < 0.0 || p0 < 0.0)
    throw std::domain_error("nonlinear_length: gamma and P0 must be >= 0");
  const double gp = gamma * p0;
  if (gp == 0.0) return std::numeric_limits<double>::infinity();  // linear regime
  return 1.0 / gp;
}

double peak_power(double energy_nj, double t0_ps) {
  if (energy_nj <= 0.0) throw std::domain_error("peak_power: energy must be > 0");
  if (t0_ps <= 0.0) throw std::domain_error("peak_power: T0 must be > 0");
  // E[nJ] = 1000 W*ps; integral of P0 exp(-T^2/T0^2) over T is P0 * sqrt(pi) * T0.
  return 1000.0 * energy_nj / (std::sqrt(std::numbers::pi) * t0_ps);
}

double gaussian_pulse(double t, double t0) {
  if (t0 <= 0.0) throw std::domain_error("gaussian_pulse: T0 must be > 0");
  const double u = t / t0;
  return std::exp(-0.5 * u * u);
}

double fwhm(double t0) {
  if (t0 <= 0.0) throw std::domain_error("fwhm: T0 must be > 0");
  return 2.0 * std::sqrt(std::numbers::ln2) * t0;
}

double max_trainable_length(const CharacteristicLengths& lengths) {
  return 50.0 * std::min(lengths.dispersion_length, lengths.nonlinear_length);
}

CharacteristicLengths characteristic_lengths(double t0, double beta2, double gamma, double p0) {
  CharacteristicLengths out;
  out.dispersion_length = dispersion_length(t0, beta2);
  out.nonlinear_length = nonlinear_length(gamma, p0);
  out.max_trainable = max_trainable_length(out);
  return out;
}

}  // namespace mmnls
