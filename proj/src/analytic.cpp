#include "mmnls/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "mmnls/autodiff.hpp"
#include "mmnls/residual.hpp"

namespace mmnls {

std::complex<double> linear_single_mode(const AnalyticQuery& q) {
  if (q.t0 <= 0.0) throw std::domain_error("linear_single_mode: T0 must be > 0");
  const std::complex<double> denom(q.t0 * q.t0, -q.beta2 * q.z);
  return q.t0 / std::sqrt(denom) * std::exp(-q.t * q.t / (2.0 * denom));
}

std::complex<double> linear_multimode(const AnalyticQuery& q) {
  AnalyticQuery base = q;
  base.delta_beta0 = 0.0;
  const double phi = -q.delta_beta0 * q.z;
  return std::polar(1.0, phi) * linear_single_mode(base);
}

double gaussian_spectrum(double omega, double t0) {
  if (t0 <= 0.0) throw std::domain_error("gaussian_spectrum: T0 must be > 0");
  return t0 * std::exp(-0.5 * t0 * t0 * omega * omega);
}

std::complex<double> normalized_linear_mode(const NormalizedSystem& sys, std::size_t mode,
                                            double split, double zeta, double t) {
  const NormalizedSystem::Mode& m = sys.modes.at(mode);
  AnalyticQuery q;
  q.z = zeta;
  q.t = t - m.a1 * zeta;
  q.t0 = 1.0 / sys.frame.k2;
  q.beta2 = -2.0 * sys.a2;
  const std::complex<double> base = linear_single_mode(q);
  return std::sqrt(split) * std::polar(1.0, m.a0 * zeta) * base;
}

namespace {

// 4th-order central differences of the normalized solution at (zeta, t).
ModeJets fd_jets(const NormalizedSystem& sys, std::size_t p, double split, double zeta,
                 double t, double hz, double ht) {
  auto u = [&](double zz, double tt) { return normalized_linear_mode(sys, p, split, zz, tt); };

  const std::complex<double> c0 = u(zeta, t);
  const std::complex<double> zp1 = u(zeta + hz, t), zm1 = u(zeta - hz, t);
  const std::complex<double> zp2 = u(zeta + 2 * hz, t), zm2 = u(zeta - 2 * hz, t);
  const std::complex<double> tp1 = u(zeta, t + ht), tm1 = u(zeta, t - ht);
  const std::complex<double> tp2 = u(zeta, t + 2 * ht), tm2 = u(zeta, t - 2 * ht);

  const std::complex<double> dz = (-zp2 + 8.0 * zp1 - 8.0 * zm1 + zm2) / (12.0 * hz);
  const std::complex<double> dt = (-tp2 + 8.0 * tp1 - 8.0 * tm1 + tm2) / (12.0 * ht);
  const std::complex<double> dtt =
      (-tp2 + 16.0 * tp1 - 30.0 * c0 + 16.0 * tm1 - tm2) / (12.0 * ht * ht);

  ModeJets j;
  j.re = Jet{c0.real(), dt.real(), dtt.real(), dz.real()};
  j.im = Jet{c0.imag(), dt.imag(), dtt.imag(), dz.imag()};
  return j;
}

}  // namespace

double normalized_residual_of_analytic(const NormalizedSystem& op,
                                       const NormalizedSystem& solution_of,
                                       const std::vector<double>& split,
                                       const ResidualProbe& probe) {
  const std::size_t n_modes = solution_of.mode_count();
  if (split.size() != n_modes)
    throw std::invalid_argument("normalized_residual_of_analytic: split size mismatch");

  const double width = 1.0 / solution_of.frame.k2;
  double max_a1 = 0.0;
  for (const auto& m : solution_of.modes) max_a1 = std::max(max_a1, std::abs(m.a1));
  const double halfspan =
      probe.t_halfspan > 0.0 ? probe.t_halfspan : 3.0 * width + max_a1;
  const double ht = probe.h_t > 0.0 ? probe.h_t : width / 20.0;

  std::vector<ModeJets> jets(n_modes);
  double worst = 0.0;
  for (int iz = 0; iz < probe.n_zeta; ++iz) {
    const double zeta = probe.zeta_lo +
        (probe.zeta_hi - probe.zeta_lo) * iz / std::max(probe.n_zeta - 1, 1);
    for (int it = 0; it < probe.n_t; ++it) {
      const double t = -halfspan + 2.0 * halfspan * it / std::max(probe.n_t - 1, 1);
      for (std::size_t p = 0; p < n_modes; ++p)
        jets[p] = fd_jets(solution_of, p, split[p], zeta, t, probe.h_zeta, ht);
      worst = std::max(worst, std::sqrt(pde_residual(jets, op)));
    }
  }
  return worst;
}

}  // namespace mmnls
