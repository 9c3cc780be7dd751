// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include <Eigen/Core>

namespace s3fam {

/// The two model surfaces in R^3 whose distance-squared critical points
/// control the non-transverse intersections of the quadric family:
/// the hyperbola cylinder {x1 x2 = 1} and the saddle {x1 x2 = x3}.
enum class QuadricCase { kHyperbolaCylinder, kSaddle };

struct CriticalPoints {
  std::vector<Eigen::Vector3d> points;
  int count() const { return static_cast<int>(points.size()); }
};

/// All critical points of x -> |x - b|^2 restricted to the chosen surface.
/// For the saddle the interior branch reduces to a quintic in t = x3 - b3
/// (the two branches t = +-1 contribute quadratics); the cylinder reduces
/// to a quartic in x1. The count never exceeds 9.
CriticalPoints critical_count(QuadricCase which, const Eigen::Vector3d& b);

}  // namespace s3fam
