#include "mmnls/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mmnls {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

FrameFactors frame_factors(double l_max, double l_d, double t_max, double t0) {
  if (l_max <= 0.0 || l_d <= 0.0 || t_max <= 0.0 || t0 <= 0.0)
    throw std::domain_error("frame_factors: all inputs must be > 0");
  FrameFactors f;
  f.k1 = l_max / l_d;
  f.k2 = t_max / t0;
  f.l_ref = f.k1 * l_d;
  f.t_ref = f.k2 * t0;
  return f;
}

ScaledBeta0 scale_beta0(double delta_beta0, double z) {
  if (z <= 0.0) throw std::domain_error("scale_beta0: z must be > 0");
  ScaledBeta0 out;
  out.original = delta_beta0;
  out.z_ref = z;
  out.periods = -static_cast<std::int64_t>(std::trunc(delta_beta0 * z / two_pi));
  out.scaled = delta_beta0 + (two_pi / z) * static_cast<double>(out.periods);
  return out;
}

double periodic_shift_equivalence(double delta_beta0, double z, std::int64_t l) {
  if (z <= 0.0) throw std::domain_error("periodic_shift_equivalence: z must be > 0");
  return delta_beta0 + (two_pi / z) * static_cast<double>(l);
}

std::pair<double, double> restore_phase(double re0, double im0, double delta_beta0, double z) {
  const double phi = -delta_beta0 * z;
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {re0 * c - im0 * s, re0 * s + im0 * c};
}

NormalizedSystem normalized_coefficients(const FiberSpec& fiber, const PulseSpec& pulse,
                                         const FrameFactors& frame, bool scaling) {
  fiber.validate();
  pulse.validate(fiber.mode_count());

  const ModeParams& fundamental = fiber.modes.front();
  const double l_d = dispersion_length(pulse.half_width, fundamental.beta2);

  NormalizedSystem sys;
  sys.frame = frame;
  sys.c = -std::copysign(0.5, fundamental.beta2);
  const double l_nl = nonlinear_length(fundamental.gamma_s, pulse.peak_power);
  sys.d = std::isinf(l_nl) ? 0.0 : l_d / l_nl;
  sys.a2 = frame.k1 * sys.c / (frame.k2 * frame.k2);
  sys.a_spm = frame.k1 * sys.d;

  const double gamma_s = fundamental.gamma_s;
  sys.modes.reserve(fiber.mode_count());
  for (const ModeParams& m : fiber.modes) {
    NormalizedSystem::Mode nm;
    const double beta0 = scaling ? scale_beta0(m.delta_beta0, fiber.length).scaled
                                 : m.delta_beta0;
    nm.a0 = frame.k1 * beta0;
    nm.a1 = frame.k1 * m.delta_beta1 / frame.k2;
    nm.a_xpm.reserve(m.gamma_c.size());
    for (double gc : m.gamma_c) {
      const double ratio = (sys.d == 0.0 || gamma_s == 0.0) ? 0.0 : gc / gamma_s;
      nm.a_xpm.push_back(frame.k1 * sys.d * ratio);
    }
    sys.modes.push_back(std::move(nm));
  }
  return sys;
}

}  // namespace mmnls
