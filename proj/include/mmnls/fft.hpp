#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mmnls {

/// Uniform time grid with T_j = -T_max/2 + j * T_max/n and the standard signed
/// DFT frequency layout omega_k = 2 pi k / T_max, k in [-n/2, n/2).
struct TimeGrid {
  std::size_t n_t = 0;
  double t_max = 0.0;   ///< ps

  TimeGrid() = default;
  TimeGrid(std::size_t n, double tmax);

  double dt() const { return t_max / static_cast<double>(n_t); }
  double sample(std::size_t j) const { return -0.5 * t_max + dt() * static_cast<double>(j); }

  /// Signed frequency index for DFT bin k.
  long k_signed(std::size_t k) const {
    return k < n_t / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(n_t);
  }
  double omega(std::size_t k) const;  ///< rad/ps

  std::vector<double> samples() const;
  std::vector<double> omegas() const;
};

/// Spectral transform pair on a TimeGrid, with the synthesis kernel
/// exp(-i omega T) so that d/dT maps to multiplication by -i omega:
///   forward:  X_k = sum_j x_j exp(+i omega_k T_j)
///   inverse:  x_j = (1/n) sum_k X_k exp(-i omega_k T_j)
/// Power-of-two lengths only (radix-2, precomputed twiddles).
class SpectralTransform {
public:
  explicit SpectralTransform(const TimeGrid& grid);

  void forward(std::vector<std::complex<double>>& field) const;
  void inverse(std::vector<std::complex<double>>& spectrum) const;

  const TimeGrid& grid() const { return grid_; }

private:
  void fft(std::vector<std::complex<double>>& a, bool conjugate) const;

  TimeGrid grid_;
  std::vector<std::size_t> bitrev_;
  std::vector<std::complex<double>> twiddle_;  // exp(+2 pi i j / n), j < n/2
};

}  // namespace mmnls
