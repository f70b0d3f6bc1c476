#include "mmnls/residual.hpp"

#include <cmath>
#include <stdexcept>

namespace mmnls {

namespace {

struct ModeTerms {
  double r;  // real residual component
  double i;  // imaginary residual component
  double n;  // nonlinear weight a_spm |U_p|^2 + sum xpm |U_n|^2
};

ModeTerms mode_terms(std::span<const ModeJets> jets, const NormalizedSystem& c, std::size_t p) {
  const NormalizedSystem::Mode& m = c.modes[p];
  const Jet& re = jets[p].re;
  const Jet& im = jets[p].im;

  double n = c.a_spm * (re.v * re.v + im.v * im.v);
  for (std::size_t q = 0; q < jets.size(); ++q) {
    if (q == p) continue;
    const double pw = jets[q].re.v * jets[q].re.v + jets[q].im.v * jets[q].im.v;
    n += c.xpm(p, q) * pw;
  }

  ModeTerms t;
  t.n = n;
  t.r = -im.dz + m.a0 * re.v - m.a1 * im.dt + c.a2 * re.dtt + n * re.v;
  t.i = re.dz + m.a0 * im.v + m.a1 * re.dt + c.a2 * im.dtt + n * im.v;
  return t;
}

}  // namespace

double pde_residual(std::span<const ModeJets> jets, const NormalizedSystem& coeffs) {
  if (jets.size() != coeffs.mode_count())
    throw std::invalid_argument("pde_residual: jets/coefficients mode count mismatch");
  double r = 0.0;
  for (std::size_t p = 0; p < jets.size(); ++p) {
    const ModeTerms t = mode_terms(jets, coeffs, p);
    r += t.r * t.r + t.i * t.i;
  }
  return r;
}

double pde_residual_with_seeds(std::span<const ModeJets> jets, const NormalizedSystem& coeffs,
                               std::span<ModeJets> seeds) {
  if (jets.size() != coeffs.mode_count() || seeds.size() != jets.size())
    throw std::invalid_argument("pde_residual_with_seeds: size mismatch");
  for (ModeJets& s : seeds) s = ModeJets{};

  double r = 0.0;
  for (std::size_t p = 0; p < jets.size(); ++p) {
    const NormalizedSystem::Mode& m = coeffs.modes[p];
    const ModeTerms t = mode_terms(jets, coeffs, p);
    r += t.r * t.r + t.i * t.i;

    const double gr = 2.0 * t.r;
    const double gi = 2.0 * t.i;
    const Jet& re = jets[p].re;
    const Jet& im = jets[p].im;

    seeds[p].im.dz -= gr;
    seeds[p].re.v += gr * (m.a0 + t.n);
    seeds[p].im.dt -= gr * m.a1;
    seeds[p].re.dtt += gr * coeffs.a2;

    seeds[p].re.dz += gi;
    seeds[p].im.v += gi * (m.a0 + t.n);
    seeds[p].re.dt += gi * m.a1;
    seeds[p].im.dtt += gi * coeffs.a2;

    // the nonlinear weight couples every mode's value channels
    const double w = gr * re.v + gi * im.v;
    seeds[p].re.v += w * 2.0 * coeffs.a_spm * re.v;
    seeds[p].im.v += w * 2.0 * coeffs.a_spm * im.v;
    for (std::size_t q = 0; q < jets.size(); ++q) {
      if (q == p) continue;
      const double k = w * 2.0 * coeffs.xpm(p, q);
      seeds[q].re.v += k * jets[q].re.v;
      seeds[q].im.v += k * jets[q].im.v;
    }
  }
  return r;
}

double ic_residual(std::span<const double> values, double t, double k2,
                   std::span<const double> split) {
  if (values.size() != 2 * split.size())
    throw std::invalid_argument("ic_residual: values size must be 2 * mode count");
  const double g = std::exp(-0.5 * (k2 * t) * (k2 * t));
  double r = 0.0;
  for (std::size_t p = 0; p < split.size(); ++p) {
    const double dre = values[2 * p] - std::sqrt(split[p]) * g;
    const double dim = values[2 * p + 1];
    r += dre * dre + dim * dim;
  }
  return r;
}

double ic_residual_with_seeds(std::span<const double> values, double t, double k2,
                              std::span<const double> split, std::span<double> seeds) {
  if (seeds.size() != values.size())
    throw std::invalid_argument("ic_residual_with_seeds: seeds size mismatch");
  const double g = std::exp(-0.5 * (k2 * t) * (k2 * t));
  double r = 0.0;
  for (std::size_t p = 0; p < split.size(); ++p) {
    const double dre = values[2 * p] - std::sqrt(split[p]) * g;
    const double dim = values[2 * p + 1];
    r += dre * dre + dim * dim;
    seeds[2 * p] = 2.0 * dre;
    seeds[2 * p + 1] = 2.0 * dim;
  }
  return r;
}

}  // namespace mmnls
