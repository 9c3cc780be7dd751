// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>

#include <Eigen/Core>

#include "s3fam/quaternion.hpp"

namespace s3fam {

/// An element of SO(4), stored as a 4x4 matrix and optionally as the
/// unit-quaternion pair (q1, q2) acting by p -> q1 p q2^-1.
class Isometry4 {
 public:
  Isometry4() : mat_(Eigen::Matrix4d::Identity()) {}
  explicit Isometry4(const Eigen::Matrix4d& m) : mat_(m) {}

  static Isometry4 identity() { return Isometry4(); }
  static Isometry4 from_pair(const Quaternion& q1, const Quaternion& q2);

  const Eigen::Matrix4d& matrix() const { return mat_; }
  bool has_pair() const { return pair_.has_value(); }
  const std::pair<Quaternion, Quaternion>& pair() const { return *pair_; }

  /// Recovers a quaternion pair from the matrix (unique up to a global sign).
  std::pair<Quaternion, Quaternion> pair_from_matrix() const;

  Eigen::Vector4d apply(const Eigen::Vector4d& p) const { return mat_ * p; }

  Isometry4 compose(const Isometry4& rhs) const;
  Isometry4 inverse() const;
  double distance(const Isometry4& rhs) const { return (mat_ - rhs.mat_).norm(); }

  /// Frobenius deviation from orthogonality plus |det - 1|.
  double so4_residual() const;

 private:
  Eigen::Matrix4d mat_;
  std::optional<std::pair<Quaternion, Quaternion>> pair_;
};

/// Matrix of left multiplication p -> q p on H = R^4.
Eigen::Matrix4d left_mult_matrix(const Quaternion& q);
/// Matrix of right multiplication p -> p q on H = R^4.
Eigen::Matrix4d right_mult_matrix(const Quaternion& q);

}  // namespace s3fam
