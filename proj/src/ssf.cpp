#include "mmnls/ssf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mmnls {

void linear_half_step(std::vector<std::vector<std::complex<double>>>& spectra, double h,
                      const std::vector<ModeParams>& modes, const TimeGrid& grid) {
  if (h <= 0.0) throw std::domain_error("linear_half_step: h must be > 0");
  if (spectra.size() != modes.size())
    throw std::invalid_argument("linear_half_step: mode count mismatch");
  for (std::size_t p = 0; p < modes.size(); ++p) {
    const ModeParams& m = modes[p];
    auto& s = spectra[p];
    if (s.size() != grid.n_t) throw std::invalid_argument("linear_half_step: length mismatch");
    for (std::size_t k = 0; k < grid.n_t; ++k) {
      const double w = grid.omega(k);
      const double phase = h * (-m.delta_beta0 + m.delta_beta1 * w + 0.5 * m.beta2 * w * w);
      s[k] *= std::polar(1.0, phase);
    }
  }
}

void nonlinear_step(std::vector<std::vector<std::complex<double>>>& fields, double h,
                    const std::vector<ModeParams>& modes) {
  if (h <= 0.0) throw std::domain_error("nonlinear_step: h must be > 0");
  const std::size_t n_modes = fields.size();
  if (n_modes != modes.size())
    throw std::invalid_argument("nonlinear_step: mode count mismatch");
  if (n_modes == 0) return;
  const std::size_t n_t = fields[0].size();

  // |A_n|^2 for every mode first, so the step uses a consistent snapshot
  std::vector<std::vector<double>> power(n_modes, std::vector<double>(n_t));
  for (std::size_t p = 0; p < n_modes; ++p)
    for (std::size_t j = 0; j < n_t; ++j) power[p][j] = std::norm(fields[p][j]);

  for (std::size_t p = 0; p < n_modes; ++p) {
    const ModeParams& m = modes[p];
    for (std::size_t j = 0; j < n_t; ++j) {
      double kerr = m.gamma_s * power[p][j];
      std::size_t idx = 0;
      for (std::size_t n = 0; n < n_modes; ++n) {
        if (n == p) continue;
        kerr += m.gamma_c[idx++] * power[n][j];
      }
      fields[p][j] *= std::polar(1.0, -h * kerr);
    }
  }
}

std::size_t default_step_count(const FiberSpec& fiber, const PulseSpec& pulse) {
  const double l_d = dispersion_length(pulse.half_width, fiber.modes.front().beta2);
  const double l_nl = nonlinear_length(fiber.modes.front().gamma_s, pulse.peak_power);
  const double scale = std::min(l_d, l_nl);
  const double raw = std::ceil(20.0 * fiber.length / scale);
  return static_cast<std::size_t>(std::clamp(raw, 1000.0, 200000.0));
}

std::vector<std::vector<std::complex<double>>> gaussian_initial_condition(
    const PulseSpec& pulse, std::size_t n_modes, const TimeGrid& grid) {
  pulse.validate(n_modes);
  std::vector<std::vector<std::complex<double>>> fields(
      n_modes, std::vector<std::complex<double>>(grid.n_t));
  for (std::size_t p = 0; p < n_modes; ++p) {
    const double amp = std::sqrt(pulse.energy_split[p] * pulse.peak_power);
    for (std::size_t j = 0; j < grid.n_t; ++j)
      fields[p][j] = amp * gaussian_pulse(grid.sample(j), pulse.half_width);
  }
  return fields;
}

namespace {

double edge_ratio(const std::vector<std::vector<std::complex<double>>>& fields) {
  double peak = 0.0, edge = 0.0;
  for (const auto& f : fields) {
    for (const auto& x : f) peak = std::max(peak, std::abs(x));
    edge = std::max({edge, std::abs(f.front()), std::abs(f.back())});
  }
  return peak > 0.0 ? edge / peak : 0.0;
}

bool all_finite(const std::vector<std::vector<std::complex<double>>>& fields) {
  for (const auto& f : fields)
    for (const auto& x : f)
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

}  // namespace

ComplexFieldGrid propagate(const std::vector<std::vector<std::complex<double>>>& initial,
                           const FiberSpec& fiber, const TimeGrid& grid, const SsfConfig& cfg) {
  fiber.validate();
  const std::size_t n_modes = fiber.mode_count();
  if (initial.size() != n_modes)
    throw std::invalid_argument("propagate: initial mode count mismatch");
  for (const auto& f : initial)
    if (f.size() != grid.n_t) throw std::invalid_argument("propagate: initial length mismatch");
  if (cfg.n_z < 1) throw std::invalid_argument("propagate: n_z must be >= 1");

  const std::size_t n_z = cfg.n_z;
  const std::size_t stride =
      cfg.checkpoint_stride > 0 ? cfg.checkpoint_stride : std::max<std::size_t>(1, n_z / 64);
  const double h = fiber.length / static_cast<double>(n_z);

  const SpectralTransform transform(grid);
  auto fields = initial;

  ComplexFieldGrid out;
  out.n_modes = n_modes;
  out.n_t = grid.n_t;
  out.t_max = grid.t_max;

  auto checkpoint = [&](double z) {
    out.z_checkpoints.push_back(z);
    if (out.modes.empty()) out.modes.resize(n_modes);
    for (std::size_t p = 0; p < n_modes; ++p)
      out.modes[p].insert(out.modes[p].end(), fields[p].begin(), fields[p].end());
    out.max_edge_ratio = std::max(out.max_edge_ratio, edge_ratio(fields));
  };

  auto apply_linear_half = [&](double hh) {
    for (auto& f : fields) transform.forward(f);
    linear_half_step(fields, hh, fiber.modes, grid);
    for (auto& f : fields) transform.inverse(f);
  };

  checkpoint(0.0);
  for (std::size_t step = 0; step < n_z; ++step) {
    apply_linear_half(0.5 * h);
    nonlinear_step(fields, h, fiber.modes);
    apply_linear_half(0.5 * h);

    if (!all_finite(fields))
      throw PropagationError("propagate: non-finite field at step " + std::to_string(step + 1) +
                                 " (step size too large?)",
                             step + 1);

    if ((step + 1) % stride == 0 || step + 1 == n_z) {
      const double z = (step + 1 == n_z) ? fiber.length
                                         : h * static_cast<double>(step + 1);
      checkpoint(z);
    }
  }
  return out;
}

double l2_norm(const std::vector<std::vector<std::complex<double>>>& fields) {
  double s = 0.0;
  for (const auto& f : fields)
    for (const auto& x : f) s += std::norm(x);
  return s;
}

}  // namespace mmnls
