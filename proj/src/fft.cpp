#include "mmnls/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mmnls {

namespace {
bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }
}

TimeGrid::TimeGrid(std::size_t n, double tmax) : n_t(n), t_max(tmax) {
  if (!is_pow2(n) || n < 16)
    throw std::invalid_argument("TimeGrid: n_t must be a power of two >= 16");
  if (tmax <= 0.0) throw std::invalid_argument("TimeGrid: T_max must be > 0");
}

double TimeGrid::omega(std::size_t k) const {
  return 2.0 * std::numbers::pi * static_cast<double>(k_signed(k)) / t_max;
}

std::vector<double> TimeGrid::samples() const {
  std::vector<double> out(n_t);
  for (std::size_t j = 0; j < n_t; ++j) out[j] = sample(j);
  return out;
}

std::vector<double> TimeGrid::omegas() const {
  std::vector<double> out(n_t);
  for (std::size_t k = 0; k < n_t; ++k) out[k] = omega(k);
  return out;
}

SpectralTransform::SpectralTransform(const TimeGrid& grid) : grid_(grid) {
  const std::size_t n = grid_.n_t;
  bitrev_.resize(n);
  bitrev_[0] = 0;
  for (std::size_t i = 1; i < n; ++i)
    bitrev_[i] = (bitrev_[i >> 1] >> 1) | (i & 1 ? n >> 1 : 0);
  twiddle_.resize(n / 2);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    twiddle_[j] = {std::cos(phi), std::sin(phi)};
  }
}

void SpectralTransform::fft(std::vector<std::complex<double>>& a, bool conjugate) const {
  const std::size_t n = grid_.n_t;
  if (a.size() != n) throw std::invalid_argument("SpectralTransform: length mismatch");
  for (std::size_t i = 0; i < n; ++i)
    if (bitrev_[i] > i) std::swap(a[i], a[bitrev_[i]]);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> w = twiddle_[j * stride];
        if (conjugate) w = std::conj(w);
        const std::complex<double> u = a[base + j];
        const std::complex<double> v = a[base + j + len / 2] * w;
        a[base + j] = u + v;
        a[base + j + len / 2] = u - v;
      }
    }
  }
}

void SpectralTransform::forward(std::vector<std::complex<double>>& field) const {
  // X_k = (-1)^k * FFT_+(x); the sign flip carries the T_j = -T_max/2 origin.
  fft(field, false);
  for (std::size_t k = 1; k < field.size(); k += 2) field[k] = -field[k];
}

void SpectralTransform::inverse(std::vector<std::complex<double>>& spectrum) const {
  const std::size_t n = spectrum.size();
  for (std::size_t k = 1; k < n; k += 2) spectrum[k] = -spectrum[k];
  fft(spectrum, true);
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& x : spectrum) x *= scale;
}

}  // namespace mmnls
