// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace s3fam {

namespace detail {
inline double bump_h(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }
inline double bump_h_d1(double t) {
  return t > 0.0 ? std::exp(-1.0 / t) / (t * t) : 0.0;
}
}  // namespace detail

/// Smooth non-increasing step: exactly 1 on (-inf, 1/2], exactly 0 on [1, inf).
inline double zeta(double s) {
  double h1 = detail::bump_h(1.0 - s);
  double h2 = detail::bump_h(s - 0.5);
  return h1 / (h1 + h2);
}

/// d/ds zeta(s).
inline double zeta_d1(double s) {
  double h1 = detail::bump_h(1.0 - s);
  double h2 = detail::bump_h(s - 0.5);
  double h1p = -detail::bump_h_d1(1.0 - s);
  double h2p = detail::bump_h_d1(s - 0.5);
  double denom = (h1 + h2) * (h1 + h2);
  return (h1p * h2 - h1 * h2p) / denom;
}

/// Narrow bump: delta0 * exp(-s^2/(1-s^2)^2) on (-1,1), 0 outside. Decays
/// faster than any power of 1-|s| at the ends; delta(0) = delta0.
inline double delta_bump(double s, double delta0) {
  double s2 = s * s;
  if (s2 >= 1.0) return 0.0;
  double d = 1.0 - s2;
  double e = -s2 / (d * d);
  if (e < -745.0) return 0.0;  // exp underflow
  return delta0 * std::exp(e);
}

}  // namespace s3fam
