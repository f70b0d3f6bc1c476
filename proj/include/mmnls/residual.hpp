#pragma once

#include <span>
#include <vector>

#include "mmnls/autodiff.hpp"
#include "mmnls/transforms.hpp"

namespace mmnls {

/// Real and imaginary jets of one mode's normalized envelope at a point.
struct ModeJets {
  Jet re, im;
};

/// Squared residual of the normalized coupled-mode equation at one point,
/// summed over modes. The complex equation
///   i dU/dzeta + a0 U + i a1 dU/dt + a2 d2U/dt2 + (a_spm |U|^2 + xpm) U = 0
/// splits into
///   Re: -dIm/dzeta + a0 Re - a1 dIm/dt + a2 d2Re/dt2 + N Re
///   Im: +dRe/dzeta + a0 Im + a1 dRe/dt + a2 d2Im/dt2 + N Im
/// with N = a_spm (Re^2 + Im^2) + sum_n a_xpm[n] |U_n|^2.
double pde_residual(std::span<const ModeJets> jets, const NormalizedSystem& coeffs);

/// pde_residual plus d(residual)/d(jet component) for every mode, used to seed
/// the reverse pass through the network.
double pde_residual_with_seeds(std::span<const ModeJets> jets, const NormalizedSystem& coeffs,
                               std::span<ModeJets> seeds);

/// Squared distance at zeta = 0 between the network outputs and the Gaussian
/// initial condition (sqrt(split_p) exp(-(k2 t)^2 / 2), 0), summed over modes.
/// `values` holds (re, im) per mode.
double ic_residual(std::span<const double> values, double t, double k2,
                   std::span<const double> split);

/// ic_residual plus d/d(value) seeds (layout matching `values`).
double ic_residual_with_seeds(std::span<const double> values, double t, double k2,
                              std::span<const double> split, std::span<double> seeds);

}  // namespace mmnls
