// SPDX-License-Identifier: Apache-2.0
#include "s3fam/chart.hpp"

#include <cmath>
#include <stdexcept>

namespace s3fam {

double chart_sigma(double x1, double x2) {
  double s2 = 1.0 - x1 * x1 - x2 * x2;
  return s2 > 0.0 ? std::sqrt(s2) : 0.0;
}

Eigen::Vector4d chart_to_r4(const ChartPoint& p, double tol) {
  double r2 = p.disc_radius2();
  if (r2 > 1.0 + tol) throw std::domain_error("chart_to_r4: point outside the unit disc");
  double s = chart_sigma(p.x1, p.x2);
  return {p.x1, p.x2, s * std::cos(p.alpha), s * std::sin(p.alpha)};
}

ChartPoint r4_to_chart(const Eigen::Vector4d& v, bool* collapsed) {
  ChartPoint p;
  p.x1 = v[0];
  p.x2 = v[1];
  bool c = (v[2] == 0.0 && v[3] == 0.0);
  p.alpha = c ? 0.0 : wrap_angle(std::atan2(v[3], v[2]));
  if (collapsed) *collapsed = c;
  return p;
}

ChartPoint act_on_chart(ChartGen g, const ChartPoint& p) {
  switch (g) {
    case ChartGen::g1:
      return {-p.x2, p.x1, wrap_angle(p.alpha + kPi / 3.0)};
    case ChartGen::g2:
    default:
      return {-p.x1, p.x2, wrap_angle(kPi - p.alpha)};
  }
}

}  // namespace s3fam
