// SPDX-License-Identifier: Apache-2.0
#include "s3fam/witness.hpp"

#include <functional>

#include <Eigen/SVD>

#include "s3fam/angles.hpp"
#include "s3fam/groups_catalog.hpp"
#include "s3fam/rng.hpp"

namespace s3fam {

namespace {
using Cplx = std::complex<double>;

Cplx ipow(Cplx z, int n) {
  Cplx acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= z;
  return acc;
}
}  // namespace

Eigen::Vector3d v_values(const WitnessPoint& p) {
  Cplx d12 = ipow(p.z1, 12) - ipow(p.z2, 12);
  Cplx mix = p.z1 * ipow(p.z2, 13) + ipow(p.z1, 13) * p.z2;
  Cplx phase = std::exp(Cplx(0.0, kWitnessEps * kPi));
  return {d12.real(), d12.imag(), (phase * mix).real()};
}

std::vector<WitnessPoint> enumerate_z_alpha3() {
  std::vector<WitnessPoint> out;
  out.reserve(12 * 28);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int l = 0; l < 12; ++l) {
    for (int m = 0; m < 28; ++m) {
      // 14 theta + (eps + l/6) pi = (1/2 + m) pi
      double theta = ((0.5 + m) - (kWitnessEps + l / 6.0)) * kPi / 14.0;
      WitnessPoint p;
      p.z1 = std::polar(inv_sqrt2, theta);
      p.z2 = std::polar(inv_sqrt2, theta + l * kPi / 6.0);
      p.l = l;
      p.m = m;
      p.theta = wrap_angle(theta);
      out.push_back(p);
    }
  }
  return out;
}

Eigen::Matrix<double, 5, 1> f_values(const Eigen::Matrix<double, 6, 1>& a,
                                     const WitnessPoint& p) {
  Cplx w6 = ipow(std::conj(p.z1), 6) + ipow(p.z2, 6);
  Cplx w4 = ipow(std::conj(p.z1), 4) + ipow(p.z2, 4);
  Cplx f12 = w6 * Cplx(a[1], a[2]);
  Cplx f34 = w4 * Cplx(a[3], a[4]);
  Eigen::Matrix<double, 5, 1> out;
  out << a[0], f12.real(), f12.imag(), f34.real(), f34.imag();
  return out;
}

SignLawReport equivariance_table_check(int samples, std::uint64_t seed) {
  const GTildeElement gens[3] = {gtilde0(), gtilde1(), gtilde2()};
  const double v_signs[3] = {+1.0, -1.0, -1.0};
  const double f_signs[3][5] = {
      {-1, -1, -1, -1, -1},
      {+1, -1, -1, +1, +1},
      {+1, -1, +1, -1, +1},
  };
  SignLawReport report;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Eigen::Matrix<double, 6, 1> a = rng.unit_vector<6>();
    WitnessPoint p = WitnessPoint::from_vec(rng.unit_vector<4>());
    Eigen::Vector3d v = v_values(p);
    Eigen::Matrix<double, 5, 1> f = f_values(a, p);
    for (int g = 0; g < 3; ++g) {
      // Right action on the first quaternion factor and the linear action
      // on a; the disc coordinate plays no role in v or f.
      Quaternion q = p.quat() * gens[g].right_mult.q1;
      WitnessPoint pg = WitnessPoint::from_vec(q.to_vec4());
      Eigen::Matrix<double, 6, 1> ag = gens[g].a_map * a;

      Eigen::Vector3d vg = v_values(pg);
      for (int i = 0; i < 3; ++i)
        report.max_v_residual =
            std::max(report.max_v_residual, std::fabs(vg[i] - v_signs[g] * v[i]));

      Eigen::Matrix<double, 5, 1> fg = f_values(ag, pg);
      for (int i = 0; i < 5; ++i)
        report.max_f_residual =
            std::max(report.max_f_residual, std::fabs(fg[i] - f_signs[g][i] * f[i]));
    }
  }
  return report;
}

double gradient_min_singular_value(
    const std::vector<std::function<double(const Eigen::VectorXd&)>>& functions,
    const Eigen::VectorXd& point, double fd_step) {
  const int n = static_cast<int>(point.size());
  const int m = static_cast<int>(functions.size());
  Eigen::MatrixXd jac(m, n);
  for (int r = 0; r < m; ++r) {
    Eigen::VectorXd grad(n);
    for (int d = 0; d < n; ++d) {
      Eigen::VectorXd hi = point, lo = point;
      hi[d] += fd_step;
      lo[d] -= fd_step;
      grad[d] = (functions[r](hi) - functions[r](lo)) / (2.0 * fd_step);
    }
    grad -= grad.dot(point) * point;  // tangent projection
    jac.row(r) = grad;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  return svd.singularValues()(m - 1 < n ? m - 1 : n - 1);
}

double holomorphy_residual(const std::function<Cplx(Cplx, Cplx)>& f, int samples,
                           std::uint64_t seed, double fd_step) {
  Rng rng(seed);
  double worst = 0.0;
  auto re = [&](const Eigen::Vector4d& x) {
    return f(Cplx(x[0], x[1]), Cplx(x[2], x[3])).real();
  };
  auto im = [&](const Eigen::Vector4d& x) {
    return f(Cplx(x[0], x[1]), Cplx(x[2], x[3])).imag();
  };
  for (int s = 0; s < samples; ++s) {
    Eigen::Vector4d p = rng.unit_vector<4>();
    Eigen::Vector4d grad_re, grad_im;
    for (int d = 0; d < 4; ++d) {
      Eigen::Vector4d hi = p, lo = p;
      hi[d] += fd_step;
      lo[d] -= fd_step;
      grad_re[d] = (re(hi) - re(lo)) / (2 * fd_step);
      grad_im[d] = (im(hi) - im(lo)) / (2 * fd_step);
    }
    // J(x1, y1, x2, y2) = (-y1, x1, -y2, x2)
    Eigen::Vector4d j_grad_re(-grad_re[1], grad_re[0], -grad_re[3], grad_re[2]);
    worst = std::max(worst, (j_grad_re - grad_im).norm());
  }
  return worst;
}

int witness_orbit_count(const std::vector<WitnessPoint>& points, double match_tol) {
  const Quaternion gens[2] = {Quaternion::exp_i(5.0 * kPi / 12.0), Quaternion(0, 0, 1, 0)};
  const int n = static_cast<int>(points.size());
  auto find_match = [&](const Quaternion& q) {
    for (int i = 0; i < n; ++i)
      if (points[i].quat().distance(q) < match_tol) return i;
    return -1;
  };
  std::vector<int> orbit_of(n, -1);
  int orbits = 0;
  for (int i = 0; i < n; ++i) {
    if (orbit_of[i] >= 0) continue;
    int label = orbits++;
    std::vector<int> frontier = {i};
    orbit_of[i] = label;
    while (!frontier.empty()) {
      int cur = frontier.back();
      frontier.pop_back();
      for (const Quaternion& g : gens) {
        for (const Quaternion& gg : {g, g.inverse()}) {
          int j = find_match(points[cur].quat() * gg);
          if (j < 0) return -1;  // the action does not preserve the set
          if (orbit_of[j] < 0) {
            orbit_of[j] = label;
            frontier.push_back(j);
          }
        }
      }
    }
  }
  return orbits;
}

}  // namespace s3fam
