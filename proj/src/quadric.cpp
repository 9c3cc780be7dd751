// SPDX-License-Identifier: Apache-2.0
#include "s3fam/quadric.hpp"

#include <cmath>

#include "s3fam/polyroot.hpp"

namespace s3fam {

namespace {

void push_unique(std::vector<Eigen::Vector3d>& pts, const Eigen::Vector3d& p, double tol) {
  for (const auto& q : pts)
    if ((p - q).norm() < tol) return;
  pts.push_back(p);
}

}  // namespace

CriticalPoints critical_count(QuadricCase which, const Eigen::Vector3d& b) {
  CriticalPoints out;
  const double dedup = 1e-7 * (1.0 + b.norm());

  if (which == QuadricCase::kHyperbolaCylinder) {
    // x3 = b3; tangency condition on the hyperbola gives
    // x1^4 - b1 x1^3 + b2 x1 - 1 = 0.
    std::vector<double> coeffs = {-1.0, b[1], 0.0, -b[0], 1.0};
    for (double x1 : real_polynomial_roots(coeffs)) {
      if (std::fabs(x1) < 1e-12) continue;
      double x2 = 1.0 / x1;
      double residual = std::fabs((x1 - b[0]) * x1 - (x2 - b[1]) * x2);
      if (residual < 1e-6 * (1.0 + b.squaredNorm())) {
        push_unique(out.points, {x1, x2, b[2]}, dedup);
      }
    }
    return out;
  }

  // Saddle {x1 x2 = x3}. Interior branch: t = x3 - b3 with t^2 != 1;
  // substituting the linear solve into x1 x2 = x3 gives a monic quintic.
  double b1 = b[0], b2 = b[1], b3 = b[2];
  std::vector<double> quintic = {
      b3 - b1 * b2,            // t^0
      1.0 + b1 * b1 + b2 * b2, // t^1
      -2.0 * b3 - b1 * b2,     // t^2
      -2.0,                    // t^3
      b3,                      // t^4
      1.0,                     // t^5
  };
  for (double t : real_polynomial_roots(quintic)) {
    double denom = 1.0 - t * t;
    if (std::fabs(denom) < 1e-10) continue;  // routed to the boundary branch
    double x1 = (b1 - b2 * t) / denom;
    double x2 = (b2 - b1 * t) / denom;
    double x3 = b3 + t;
    double r1 = (x1 - b1) + x2 * t;
    double r2 = (x2 - b2) + x1 * t;
    double r3 = x1 * x2 - x3;
    if (std::fabs(r1) + std::fabs(r2) + std::fabs(r3) < 1e-6 * (1.0 + b.squaredNorm()))
      push_unique(out.points, {x1, x2, x3}, dedup);
  }

  // Boundary branches x3 - b3 = +-1.
  if (std::fabs(b1 - b2) < 1e-9) {
    // x1 + x2 = b1, x1 x2 = b3 + 1
    double disc = b1 * b1 - 4.0 * (b3 + 1.0);
    if (disc >= 0.0) {
      for (double sign : {-1.0, 1.0}) {
        double u = 0.5 * (b1 + sign * std::sqrt(disc));
        push_unique(out.points, {u, b1 - u, b3 + 1.0}, dedup);
      }
    }
  }
  if (std::fabs(b1 + b2) < 1e-9) {
    // x1 - x2 = b1, x1 x2 = b3 - 1
    double disc = b1 * b1 + 4.0 * (b3 - 1.0);
    if (disc >= 0.0) {
      for (double sign : {-1.0, 1.0}) {
        double u = 0.5 * (b1 + sign * std::sqrt(disc));
        push_unique(out.points, {u, u - b1, b3 - 1.0}, dedup);
      }
    }
  }
  return out;
}

}  // namespace s3fam
