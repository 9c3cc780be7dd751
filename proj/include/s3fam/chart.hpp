// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include "s3fam/angles.hpp"

namespace s3fam {

/// Point of the (x1, x2, alpha) parametrization of S^3 by D x S^1:
/// (x, alpha) -> (x1, x2, sigma(x) cos(alpha), sigma(x) sin(alpha)),
/// sigma(x) = sqrt(1 - x1^2 - x2^2). Non-injective on the collapsed locus
/// x1^2 + x2^2 = 1, where every alpha maps to the same point of the great
/// circle C = {x3 = x4 = 0}.
struct ChartPoint {
  double x1 = 0.0;
  double x2 = 0.0;
  double alpha = 0.0;

  double disc_radius2() const { return x1 * x1 + x2 * x2; }
  bool on_collapsed_circle(double tol = 1e-12) const { return disc_radius2() >= 1.0 - tol; }
};

/// sigma(x) = sqrt(1 - |x|^2), clamped at 0.
double chart_sigma(double x1, double x2);

/// Chart to R^4; throws std::domain_error if x1^2 + x2^2 > 1 + tol.
Eigen::Vector4d chart_to_r4(const ChartPoint& p, double tol = 1e-12);

/// Inverse chart. The collapsed circle is flagged, not inverted: there the
/// returned alpha is 0 and `collapsed` is set.
ChartPoint r4_to_chart(const Eigen::Vector4d& v, bool* collapsed = nullptr);

enum class ChartGen { g1, g2 };

/// The D_24 generators in chart coordinates:
///   g1: (x1, x2, alpha) -> (-x2, x1, alpha + pi/3)
///   g2: (x1, x2, alpha) -> (-x1, x2, pi - alpha)
ChartPoint act_on_chart(ChartGen g, const ChartPoint& p);

}  // namespace s3fam
