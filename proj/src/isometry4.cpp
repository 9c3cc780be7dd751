// SPDX-License-Identifier: Apache-2.0
#include "s3fam/isometry4.hpp"

#include <cmath>

#include <Eigen/LU>

namespace s3fam {

Eigen::Matrix4d left_mult_matrix(const Quaternion& q) {
  Eigen::Matrix4d m;
  // Columns are q * e_k for the basis 1, i, j, k.
  m << q.w, -q.x, -q.y, -q.z,
       q.x,  q.w, -q.z,  q.y,
       q.y,  q.z,  q.w, -q.x,
       q.z, -q.y,  q.x,  q.w;
  return m;
}

Eigen::Matrix4d right_mult_matrix(const Quaternion& q) {
  Eigen::Matrix4d m;
  m << q.w, -q.x, -q.y, -q.z,
       q.x,  q.w,  q.z, -q.y,
       q.y, -q.z,  q.w,  q.x,
       q.z,  q.y, -q.x,  q.w;
  return m;
}

Isometry4 Isometry4::from_pair(const Quaternion& q1, const Quaternion& q2) {
  Isometry4 iso;
  iso.mat_ = left_mult_matrix(q1) * right_mult_matrix(q2.inverse());
  iso.pair_ = std::make_pair(q1, q2);
  return iso;
}

Isometry4 Isometry4::compose(const Isometry4& rhs) const {
  Isometry4 out(mat_ * rhs.mat_);
  if (pair_ && rhs.pair_) {
    out.pair_ = std::make_pair(pair_->first * rhs.pair_->first,
                               pair_->second * rhs.pair_->second);
  }
  return out;
}

Isometry4 Isometry4::inverse() const {
  Isometry4 out(Eigen::Matrix4d(mat_.transpose()));
  if (pair_) out.pair_ = std::make_pair(pair_->first.inverse(), pair_->second.inverse());
  return out;
}

double Isometry4::so4_residual() const {
  double orth = (mat_.transpose() * mat_ - Eigen::Matrix4d::Identity()).norm();
  return orth + std::fabs(mat_.determinant() - 1.0);
}

namespace {

// Unit quaternion of an SO(3) matrix, Shepperd's method.
Quaternion quat_from_so3(const Eigen::Matrix3d& r) {
  double t = r.trace();
  Quaternion q;
  if (t > 0.0) {
    double s = std::sqrt(t + 1.0) * 2.0;
    q = {0.25 * s, (r(2, 1) - r(1, 2)) / s, (r(0, 2) - r(2, 0)) / s, (r(1, 0) - r(0, 1)) / s};
  } else if (r(0, 0) > r(1, 1) && r(0, 0) > r(2, 2)) {
    double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2)) * 2.0;
    q = {(r(2, 1) - r(1, 2)) / s, 0.25 * s, (r(0, 1) + r(1, 0)) / s, (r(0, 2) + r(2, 0)) / s};
  } else if (r(1, 1) > r(2, 2)) {
    double s = std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2)) * 2.0;
    q = {(r(0, 2) - r(2, 0)) / s, (r(0, 1) + r(1, 0)) / s, 0.25 * s, (r(1, 2) + r(2, 1)) / s};
  } else {
    double s = std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1)) * 2.0;
    q = {(r(1, 0) - r(0, 1)) / s, (r(0, 2) + r(2, 0)) / s, (r(1, 2) + r(2, 1)) / s, 0.25 * s};
  }
  return q.normalized();
}

}  // namespace

std::pair<Quaternion, Quaternion> Isometry4::pair_from_matrix() const {
  if (pair_) return *pair_;
  // M(1) = q1 * q2^-1 =: u, and then p -> u^-1 M(p) equals conjugation by q2,
  // which fixes 1 and rotates the imaginary 3-space.
  Quaternion u = Quaternion::from_vec4(mat_.col(0)).normalized();
  Eigen::Matrix4d n = left_mult_matrix(u.inverse()) * mat_;
  Eigen::Matrix3d r3 = n.block<3, 3>(1, 1);
  Quaternion q2 = quat_from_so3(r3);
  Quaternion q1 = (u * q2).normalized();
  return {q1, q2};
}

}  // namespace s3fam
