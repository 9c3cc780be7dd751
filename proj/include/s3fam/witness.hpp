// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "s3fam/quaternion.hpp"

namespace s3fam {

inline constexpr double kWitnessEps = 1.0 / 2026.0;

/// A point z1 + z2 j of S^3 in C^2, optionally tagged with its (l, m, theta)
/// enumeration data.
struct WitnessPoint {
  std::complex<double> z1, z2;
  int l = -1, m = -1;
  double theta = 0.0;

  Quaternion quat() const { return {z1.real(), z1.imag(), z2.real(), z2.imag()}; }
  Eigen::Vector4d vec() const { return {z1.real(), z1.imag(), z2.real(), z2.imag()}; }
  static WitnessPoint from_vec(const Eigen::Vector4d& v) {
    return {{v[0], v[1]}, {v[2], v[3]}};
  }
};

/// v1 = Re(z1^12 - z2^12), v2 = Im(z1^12 - z2^12),
/// v3 = Re(e^{i eps pi}(z1 z2^13 + z1^13 z2)), eps = 1/2026.
Eigen::Vector3d v_values(const WitnessPoint& p);

/// The 336 = 12 x 28 common zeros of (v1, v2, v3) on the torus
/// |z1| = |z2| = 2^{-1/2}: z1 = e^{i theta}/sqrt2, z2 = e^{i(theta + l pi/6)}/sqrt2
/// with 14 theta + (eps + l/6) pi = (1/2 + m) pi.
std::vector<WitnessPoint> enumerate_z_alpha3();

/// f0 = a0, f1 + i f2 = (conj(z1)^6 + z2^6)(a1 + i a2),
/// f3 + i f4 = (conj(z1)^4 + z2^4)(a3 + i a4).
Eigen::Matrix<double, 5, 1> f_values(const Eigen::Matrix<double, 6, 1>& a,
                                     const WitnessPoint& p);

/// Highest residual of the sign laws v(p g~) = phi v(p) and f(p g~) = phi f(p)
/// over random samples; the sign tables are hard-coded from the group action.
struct SignLawReport {
  double max_v_residual = 0.0;
  double max_f_residual = 0.0;
};
SignLawReport equivariance_table_check(int samples, std::uint64_t seed);

/// Smallest singular value of the tangent-projected finite-difference
/// Jacobian of `functions` at a point of the unit sphere in R^n.
double gradient_min_singular_value(
    const std::vector<std::function<double(const Eigen::VectorXd&)>>& functions,
    const Eigen::VectorXd& point, double fd_step = 1e-5);

/// max residual of J grad Re(f) = grad Im(f) over random points of S^3 in
/// C^2, with finite-difference gradients; J the standard complex structure.
double holomorphy_residual(const std::function<std::complex<double>(std::complex<double>,
                                                                    std::complex<double>)>& f,
                           int samples, std::uint64_t seed, double fd_step = 1e-5);

/// Orbit count of the witness set under the order-48 right-multiplication
/// action generated by q -> q e^{i 5pi/12} and q -> q j.
int witness_orbit_count(const std::vector<WitnessPoint>& points, double match_tol = 1e-6);

}  // namespace s3fam
