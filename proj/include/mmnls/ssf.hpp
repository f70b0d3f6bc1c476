#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mmnls/fft.hpp"
#include "mmnls/fiber.hpp"

namespace mmnls {

/// Split-step configuration. The scheme is fixed symmetric (Strang):
/// half linear, full nonlinear, half linear per step, with a constant step.
struct SsfConfig {
  std::size_t n_z = 0;              ///< 0 = resolve via default_step_count
  std::size_t n_t = 4096;
  std::size_t checkpoint_stride = 0;///< 0 = aim for ~64 checkpoints
};

/// Checkpointed per-mode field history A_p(z, T).
struct ComplexFieldGrid {
  std::size_t n_modes = 0;
  std::size_t n_t = 0;
  double t_max = 0.0;
  std::vector<double> z_checkpoints;                       ///< starts at 0, ends at L
  std::vector<std::vector<std::complex<double>>> modes;    ///< [mode][checkpoint * n_t + j]
  double max_edge_ratio = 0.0;  ///< worst |A(edge)| / |A|_peak seen at any checkpoint

  std::size_t n_checkpoints() const { return z_checkpoints.size(); }
  std::complex<double> at(std::size_t mode, std::size_t iz, std::size_t j) const {
    return modes[mode][iz * n_t + j];
  }
  /// Window-edge leakage above this level triggers a warning downstream.
  static constexpr double edge_tolerance = 1e-6;
};

struct PropagationError : std::runtime_error {
  PropagationError(const std::string& msg, std::size_t step_index)
      : std::runtime_error(msg), step(step_index) {}
  std::size_t step;
};

/// Per-mode spectral phase factor over distance h:
///   A_hat *= exp(i h (-delta_beta0 + delta_beta1 * omega + beta2/2 * omega^2))
/// Phase-only; the magnitude of every bin is unchanged.
void linear_half_step(std::vector<std::vector<std::complex<double>>>& spectra, double h,
                      const std::vector<ModeParams>& modes, const TimeGrid& grid);

/// Pointwise Kerr phase over distance h:
///   A_p *= exp(-i h (gamma_s |A_p|^2 + sum_{n != p} gamma_c[n] |A_n|^2))
void nonlinear_step(std::vector<std::vector<std::complex<double>>>& fields, double h,
                    const std::vector<ModeParams>& modes);

/// 20 steps per characteristic length, clamped to [1000, 200000].
std::size_t default_step_count(const FiberSpec& fiber, const PulseSpec& pulse);

/// Gaussian initial condition sqrt(split_p * P0) exp(-T^2 / (2 T0^2)) per mode.
std::vector<std::vector<std::complex<double>>> gaussian_initial_condition(
    const PulseSpec& pulse, std::size_t n_modes, const TimeGrid& grid);

/// Symmetric split-step propagation over the full fiber. Deterministic for
/// fixed inputs; throws PropagationError with the step index if the field
/// turns non-finite mid-run.
ComplexFieldGrid propagate(const std::vector<std::vector<std::complex<double>>>& initial,
                           const FiberSpec& fiber, const TimeGrid& grid, const SsfConfig& cfg);

/// Total discrete L2 norm, sum_p sum_j |A_p(T_j)|^2.
double l2_norm(const std::vector<std::vector<std::complex<double>>>& fields);

}  // namespace mmnls
