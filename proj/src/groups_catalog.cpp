// SPDX-License-Identifier: Apache-2.0
#include "s3fam/groups_catalog.hpp"

#include <cmath>

#include "s3fam/angles.hpp"

namespace s3fam {

QuatPair ghat1() {
  return {Quaternion::exp_i(5.0 * kPi / 12.0), Quaternion::exp_i(-kPi / 12.0)};
}

QuatPair ghat2() {
  return {Quaternion(0, 0, 1, 0), Quaternion(0, 0, -1, 0)};
}

Isometry4 d24_g1() {
  QuatPair g = ghat1();
  return Isometry4::from_pair(g.q1, g.q2);
}

Isometry4 d24_g2() {
  QuatPair g = ghat2();
  return Isometry4::from_pair(g.q1, g.q2);
}

namespace {

Eigen::Matrix2d rot2(double phi) {
  Eigen::Matrix2d r;
  r << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  return r;
}

}  // namespace

GTildeElement gtilde0() {
  GTildeElement e;
  e.a_map = -Eigen::Matrix<double, 6, 6>::Identity();
  return e;
}

GTildeElement gtilde1() {
  GTildeElement e;
  double c = 0.5, s = std::sqrt(3.0) / 2.0;  // cos(pi/3), sin(pi/3)
  Eigen::Matrix<double, 6, 6> a = Eigen::Matrix<double, 6, 6>::Zero();
  a(0, 0) = 1.0;
  a(1, 2) = 1.0;   // a1' = a2
  a(2, 1) = -1.0;  // a2' = -a1
  a(3, 3) = c;
  a(3, 4) = s;     // a3' = a3 cos(pi/3) + a4 sin(pi/3)
  a(4, 3) = -s;
  a(4, 4) = c;     // a4' = -a3 sin(pi/3) + a4 cos(pi/3)
  a(5, 5) = -1.0;
  e.a_map = a;
  e.z_map = rot2(-kPi / 3.0);  // z -> e^{-i pi/3} z
  e.right_mult = ghat1();
  return e;
}

GTildeElement gtilde2() {
  GTildeElement e;
  Eigen::Matrix<double, 6, 1> d;
  d << 1, -1, 1, -1, 1, -1;
  e.a_map = d.asDiagonal();
  e.z_map << -1, 0, 0, 1;  // z -> -conj(z)
  e.right_mult = ghat2();
  return e;
}

HTransform h0() { return {QuatPair::identity(), 1.0, kTwoPi}; }

HTransform h1() { return {ghat1().inverse(), 1.0, -kPi / 3.0}; }

HTransform h2() { return {ghat2().inverse(), -1.0, kPi}; }

}  // namespace s3fam
