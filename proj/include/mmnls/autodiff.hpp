#pragma once

#include <cmath>

namespace mmnls {

/// One network output at one collocation point, bundled with the input
/// derivatives the PDE residual needs: d/dt, d2/dt2 and d/dzeta.
struct Jet {
  double v = 0.0;
  double dt = 0.0;
  double dtt = 0.0;
  double dz = 0.0;
};

/// tanhshrink(x) = x - tanh(x)
inline double tanhshrink(double x) { return x - std::tanh(x); }

/// First three derivatives of tanhshrink expressed through s = tanh(x):
/// f' = s^2, f'' = 2 s (1 - s^2), f''' = 2 (1 - s^2)(1 - 3 s^2).
struct ActDerivs {
  double f1, f2, f3;
};

inline ActDerivs tanhshrink_derivs(double s) {
  const double sp = 1.0 - s * s;  // tanh'
  return {s * s, 2.0 * s * sp, 2.0 * sp * (1.0 - 3.0 * s * s)};
}

}  // namespace mmnls
