// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include "s3fam/isometry4.hpp"
#include "s3fam/quaternion.hpp"

namespace s3fam {

/// Element of the unit-quaternion double cover S^3 x S^3 -> SO(4).
/// Note (-q1, -q2) is a distinct element even though it induces the same
/// rotation; closures over QuatPair see the full cover.
struct QuatPair {
  Quaternion q1, q2;

  static QuatPair identity() { return {Quaternion(), Quaternion()}; }
  QuatPair compose(const QuatPair& rhs) const { return {q1 * rhs.q1, q2 * rhs.q2}; }
  QuatPair inverse() const { return {q1.inverse(), q2.inverse()}; }
  double distance(const QuatPair& rhs) const {
    return q1.distance(rhs.q1) + q2.distance(rhs.q2);
  }
  Isometry4 to_isometry() const { return Isometry4::from_pair(q1, q2); }
};

/// Transform of the parameter space S^5 x D x (S^3 x S^3): a 6x6 orthogonal
/// action on a, a 2x2 orthogonal action on z = (Re z, Im z), and a
/// componentwise right quaternion multiplication on (q1, q2).
struct GTildeElement {
  Eigen::Matrix<double, 6, 6> a_map = Eigen::Matrix<double, 6, 6>::Identity();
  Eigen::Matrix2d z_map = Eigen::Matrix2d::Identity();
  QuatPair right_mult = QuatPair::identity();

  static GTildeElement identity() { return {}; }
  GTildeElement compose(const GTildeElement& rhs) const {
    // (t o rhs)(x): rhs first, then t. Right multipliers therefore compose
    // in reverse: q -> (q * rhs.p) * p = q * (rhs.p p).
    GTildeElement out;
    out.a_map = a_map * rhs.a_map;
    out.z_map = z_map * rhs.z_map;
    out.right_mult = rhs.right_mult.compose(right_mult);
    return out;
  }
  GTildeElement inverse() const {
    GTildeElement out;
    out.a_map = a_map.transpose();
    out.z_map = z_map.transpose();
    out.right_mult = right_mult.inverse();
    return out;
  }
  double distance(const GTildeElement& rhs) const {
    return (a_map - rhs.a_map).norm() + (z_map - rhs.z_map).norm() +
           right_mult.distance(rhs.right_mult);
  }

  void apply(Eigen::Matrix<double, 6, 1>& a, Eigen::Vector2d& z, QuatPair& q) const {
    a = a_map * a;
    z = z_map * z;
    q = q.compose(right_mult);
  }
};

/// Transform of (S^3 x S^3) x R: right quaternion multiplication on the pair
/// plus an affine map t -> eps*t + shift on the line.
struct HTransform {
  QuatPair right_mult = QuatPair::identity();
  double eps = 1.0;
  double shift = 0.0;

  static HTransform identity() { return {}; }
  HTransform compose(const HTransform& rhs) const {
    // (t o rhs)(q, s) = t(q * rhs.p, rhs.eps*s + rhs.shift)
    HTransform out;
    out.right_mult = rhs.right_mult.compose(right_mult);
    out.eps = eps * rhs.eps;
    out.shift = eps * rhs.shift + shift;
    return out;
  }
  HTransform inverse() const {
    HTransform out;
    out.right_mult = right_mult.inverse();
    out.eps = eps;  // eps in {+-1}
    out.shift = -shift / eps;
    return out;
  }
  double distance(const HTransform& rhs) const {
    return right_mult.distance(rhs.right_mult) + std::fabs(eps - rhs.eps) +
           std::fabs(shift - rhs.shift);
  }
};

// --- Generator catalog ------------------------------------------------------

/// ghat1 = (e^{i 5pi/12}, e^{-i pi/12}), ghat2 = (j, -j).
QuatPair ghat1();
QuatPair ghat2();

/// g1, g2 in SO(4): the images of ghat1, ghat2 under the double cover.
Isometry4 d24_g1();
Isometry4 d24_g2();

/// Generators of the order-96 transform group on S^5 x D x (S^3 x S^3):
/// gtilde0 negates a; gtilde1 and gtilde2 combine the parameter action with
/// right multiplication by ghat1, ghat2.
GTildeElement gtilde0();
GTildeElement gtilde1();
GTildeElement gtilde2();

/// h0: (q, t) -> (q, t + 2pi); h1: (q, t) -> (q ghat1^-1, t - pi/3);
/// h2: (q, t) -> (q ghat2^-1, pi - t).
HTransform h0();
HTransform h1();
HTransform h2();

}  // namespace s3fam
