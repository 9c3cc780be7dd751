// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include <Eigen/Core>

namespace s3fam {

/// A quaternion w + xi + yj + zk. R^4 is identified with H via
/// (x1,x2,x3,x4) <-> x1 + i x2 + j x3 + k x4.
struct Quaternion {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  Quaternion() = default;
  Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  static Quaternion from_vec4(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }
  Eigen::Vector4d to_vec4() const { return {w, x, y, z}; }

  /// cos(phi) + sin(phi) i, the unit complex number embedded in H.
  static Quaternion exp_i(double phi) { return {std::cos(phi), std::sin(phi), 0.0, 0.0}; }

  Quaternion operator*(const Quaternion& q) const {
    return {w * q.w - x * q.x - y * q.y - z * q.z,
            w * q.x + x * q.w + y * q.z - z * q.y,
            w * q.y - x * q.z + y * q.w + z * q.x,
            w * q.z + x * q.y - y * q.x + z * q.w};
  }

  Quaternion operator-() const { return {-w, -x, -y, -z}; }

  Quaternion conj() const { return {w, -x, -y, -z}; }

  double squared_norm() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(squared_norm()); }

  Quaternion inverse() const {
    double n2 = squared_norm();
    Quaternion c = conj();
    return {c.w / n2, c.x / n2, c.y / n2, c.z / n2};
  }

  Quaternion normalized() const {
    double n = norm();
    return {w / n, x / n, y / n, z / n};
  }

  double distance(const Quaternion& q) const {
    double dw = w - q.w, dx = x - q.x, dy = y - q.y, dz = z - q.z;
    return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
  }
};

}  // namespace s3fam
