// SPDX-License-Identifier: Apache-2.0
#include "s3fam/family.hpp"

#include <cmath>
#include <stdexcept>

#include "s3fam/cutoffs.hpp"
#include "s3fam/group_closure.hpp"
#include "s3fam/groups_catalog.hpp"
#include "s3fam/rng.hpp"

namespace s3fam {

namespace {
const Eigen::Matrix2d kSwap = (Eigen::Matrix2d() << 0, 1, 1, 0).finished();
}

ProjParam ProjParam::from(const Vector6d& raw) {
  double n = raw.norm();
  if (n < 1e-300) throw std::invalid_argument("ProjParam: zero vector");
  Vector6d v = raw / n;
  for (int i = 0; i < 6; ++i) {
    if (std::fabs(v[i]) > 1e-15) {
      if (v[i] < 0.0) v = -v;
      break;
    }
  }
  ProjParam p;
  p.a = v;
  return p;
}

ProjParam ProjParam::from(std::initializer_list<double> raw) {
  if (raw.size() != 6) throw std::invalid_argument("ProjParam: need 6 coordinates");
  Vector6d v;
  int i = 0;
  for (double x : raw) v[i++] = x;
  return from(v);
}

double ProjParam::proj_distance(const ProjParam& rhs) const {
  return std::min((a - rhs.a).norm(), (a + rhs.a).norm());
}

DiscParam DiscParam::polar(double r, double theta) {
  if (r < 0.0 || r > 1.0 + 1e-9) throw std::invalid_argument("DiscParam: r outside [0,1]");
  DiscParam d;
  d.r = std::min(r, 1.0);
  d.theta = wrap_angle(theta);
  return d;
}

DiscParam DiscParam::cartesian(std::complex<double> z) {
  return polar(std::abs(z), std::arg(z));
}

double rho(const ProjParam& a, double x1, double x2, double delta0) {
  double a0 = a[0], a1 = a[1], a2 = a[2], a3 = a[3], a4 = a[4], a5 = a[5];
  double a52 = a5 * a5;
  double r2 = a1 * a1 + a2 * a2;
  if (a52 <= 0.0 || r2 >= a52) return 0.0;
  double s = r2 / a52;
  double ds = delta_bump(s, delta0);
  if (ds <= 0.0) return 0.0;
  double d = a52 - r2;
  double u1 = a5 * x1 + a2, u2 = a5 * x2 + a1;
  double arg1 = 64.0 * a52 * (u1 * u1 + u2 * u2) / (d * d);
  double arg2 = ((a3 * a3 + a4 * a4) * a52 + (a0 * a5 - a1 * a2) * (a0 * a5 - a1 * a2)) /
                (a52 * a52 * ds);
  return zeta(arg1) * zeta(arg2) * ds;
}

bool rho_supported(const ProjParam& a, double delta0) {
  double a0 = a[0], a1 = a[1], a2 = a[2], a3 = a[3], a4 = a[4], a5 = a[5];
  double a52 = a5 * a5;
  double r2 = a1 * a1 + a2 * a2;
  if (a52 <= 0.0 || r2 >= a52) return false;
  double ds = delta_bump(r2 / a52, delta0);
  if (ds <= 0.0) return false;
  double arg2 = ((a3 * a3 + a4 * a4) * a52 + (a0 * a5 - a1 * a2) * (a0 * a5 - a1 * a2)) /
                (a52 * a52 * ds);
  return arg2 < 1.0;
}

FamilyField::FamilyField(const FamilyParameter& param, const FamilyOptions& options)
    : param_(param), options_(options) {
  double a5 = param.a[5];
  if (std::fabs(a5) < 1e-14)
    throw std::invalid_argument("FamilyField: a5 = 0 is the Phi5 branch");
  a_ = param.a.a / a5;  // representative with a5 = 1
  double s = a_[1] * a_[1] + a_[2] * a_[2];
  center_ = {-a_[2], -a_[1]};
  kappa_ = s < 1.0 ? (1.0 - std::sqrt(s)) / 4.0 : 0.0;
  if (s < 1.0) {
    double ds = delta_bump(s, options.delta0);
    if (ds > 0.0) {
      double c0 = a_[0] - a_[1] * a_[2];
      double arg2 = (a_[3] * a_[3] + a_[4] * a_[4] + c0 * c0) / ds;
      bump_factor_ = zeta(arg2) * ds;
      zeta1_scale_ = 64.0 / ((1.0 - s) * (1.0 - s));
      support_radius2_ = (1.0 - s) * (1.0 - s) / 64.0;
    }
  }
  trig_r_ = param.z.r;
  trig_theta_ = param.z.theta;
}

double FamilyField::rho_at(double x1, double x2) const {
  if (bump_factor_ <= 0.0) return 0.0;
  double u1 = x1 - center_[0], u2 = x2 - center_[1];
  double d2 = u1 * u1 + u2 * u2;
  if (d2 >= support_radius2_) return 0.0;
  return zeta(zeta1_scale_ * d2) * bump_factor_;
}

double FamilyField::evaluate_chart(double x1, double x2, double alpha) const {
  double sg = chart_sigma(x1, x2);
  double f = a_[0] + a_[1] * x1 + a_[2] * x2 +
             sg * (a_[3] * std::cos(alpha) + a_[4] * std::sin(alpha)) + x1 * x2;
  double rho_v = rho_at(x1, x2);
  if (rho_v > 0.0) {
    f += rho_v * (trig_r_ * std::cos(trig_theta_ + 2.0 * alpha) +
                  (1.0 - trig_r_) * std::cos(3.0 * alpha));
  }
  return f;
}

double FamilyField::evaluate_r4(const Eigen::Vector4d& p) const {
  double f = a_[0] + a_[1] * p[0] + a_[2] * p[1] + a_[3] * p[2] + a_[4] * p[3] + p[0] * p[1];
  if (bump_factor_ > 0.0) {
    double u1 = p[0] - center_[0], u2 = p[1] - center_[1];
    double d2 = u1 * u1 + u2 * u2;
    if (d2 < support_radius2_) {
      // Inside the support sigma > 0, so alpha is well-defined.
      double alpha = std::atan2(p[3], p[2]);
      f += zeta(zeta1_scale_ * d2) * bump_factor_ *
           (trig_r_ * std::cos(trig_theta_ + 2.0 * alpha) +
            (1.0 - trig_r_) * std::cos(3.0 * alpha));
    }
  }
  return f;
}

double FamilyField::ambient_lipschitz_bound() const {
  // Largest slope of the smooth step, computed once.
  static const double max_zeta_slope = [] {
    double m = 0.0;
    for (int i = 0; i <= 4000; ++i) m = std::max(m, std::fabs(zeta_d1(0.5 + 0.5 * i / 4000.0)));
    return m;
  }();
  double linear = std::sqrt(a_[1] * a_[1] + a_[2] * a_[2] + a_[3] * a_[3] + a_[4] * a_[4]) + 1.0;
  double bump = 0.0;
  if (bump_factor_ > 0.0) {
    double s = a_[1] * a_[1] + a_[2] * a_[2];
    double support_radius = std::sqrt(support_radius2_);
    // |grad rho| <= bf * zeta' * scale * 2R; |rho d(trig)/dp| <= bf * 3 / sigma_min.
    double sigma_min2 = 1.0 - std::pow(std::sqrt(s) + support_radius, 2);
    double inv_sigma = sigma_min2 > 1e-12 ? 1.0 / std::sqrt(sigma_min2) : 1e6;
    bump = bump_factor_ *
           (max_zeta_slope * zeta1_scale_ * 2.0 * support_radius + 3.0 * inv_sigma);
  }
  return 1.2 * (linear + bump);  // 20% headroom over the analytic bound
}

Eigen::Vector2d FamilyField::grad_x(double x1, double x2, double alpha) const {
  double sg = chart_sigma(x1, x2);
  double trig1 = a_[3] * std::cos(alpha) + a_[4] * std::sin(alpha);
  Eigen::Vector2d g(a_[1] + x2, a_[2] + x1);
  if (sg > 1e-12) {
    g[0] -= (x1 / sg) * trig1;
    g[1] -= (x2 / sg) * trig1;
  }
  if (bump_factor_ > 0.0) {
    double u1 = x1 - center_[0], u2 = x2 - center_[1];
    double d2 = u1 * u1 + u2 * u2;
    if (d2 < support_radius2_) {
      double p_alpha = trig_r_ * std::cos(trig_theta_ + 2.0 * alpha) +
                       (1.0 - trig_r_) * std::cos(3.0 * alpha);
      double zp = zeta_d1(zeta1_scale_ * d2) * zeta1_scale_ * bump_factor_ * p_alpha;
      g[0] += zp * 2.0 * u1;
      g[1] += zp * 2.0 * u2;
    }
  }
  return g;
}

Eigen::Matrix2d FamilyField::hess_x(double x1, double x2, double alpha, double h) const {
  Eigen::Matrix2d hess;
  Eigen::Vector2d gx1p = grad_x(x1 + h, x2, alpha), gx1m = grad_x(x1 - h, x2, alpha);
  Eigen::Vector2d gx2p = grad_x(x1, x2 + h, alpha), gx2m = grad_x(x1, x2 - h, alpha);
  hess.col(0) = (gx1p - gx1m) / (2 * h);
  hess.col(1) = (gx2p - gx2m) / (2 * h);
  return 0.5 * (hess + hess.transpose());
}

Phi5Class classify_phi5(const ProjParam& a, double tol) {
  Phi5Class out;
  double a5 = a[5];
  if (std::fabs(a5) < tol) {
    Eigen::Vector4d v(a[1], a[2], a[3], a[4]);
    double n = v.norm();
    if (n < tol || std::fabs(a[0]) > n) {
      out.kind = Phi5Class::kEmpty;
    } else {
      out.kind = Phi5Class::kAffineSphere;
    }
    out.max_nontransverse_points = 0;
    return out;
  }
  double b0 = a[0] / a5, b1 = a[1] / a5, b2 = a[2] / a5, b3 = a[3] / a5, b4 = a[4] / a5;
  double c0 = b0 - b1 * b2;
  if (std::fabs(c0) < tol && std::fabs(b3) < tol && std::fabs(b4) < tol) {
    double s = b1 * b1 + b2 * b2;
    if (s < 1.0) {
      out.kind = Phi5Class::kSingularPair;
      out.in_a_sing = true;
      out.singular_circle_center = {-b2, -b1};
      out.max_nontransverse_points = 0;
      return out;
    }
    out.kind = Phi5Class::kSpherePair;
    return out;
  }
  out.kind = Phi5Class::kRegular;
  return out;
}

Eigen::Vector2d critical_point_at(const FamilyField& field, double alpha) {
  const auto& opt = field.options();
  Eigen::Vector2d center = field.bump_center();
  double bound = std::max(field.kappa(), 1e-6);
  Eigen::Vector2d y(0.0, 0.0);
  for (int it = 0; it < opt.fp_max_iterations; ++it) {
    Eigen::Vector2d g = field.grad_x(center[0] + y[0], center[1] + y[1], alpha);
    Eigen::Vector2d step = kSwap * g;
    y -= step;
    if (y.norm() > 0.5 * bound)  // left D_{kappa/2}: not contracting
      throw NonContraction("critical_point_at: iterate escaped the bump neighborhood");
    if (step.norm() < opt.fp_tolerance) return y + center;
  }
  throw NonContraction("critical_point_at: no convergence within iteration limit");
}

CriticalCurve critical_curve(const FamilyField& field, int n_alpha) {
  CriticalCurve out;
  out.alphas.resize(n_alpha);
  out.points.resize(n_alpha);
  Eigen::Vector2d center = field.bump_center();
  for (int i = 0; i < n_alpha; ++i) {
    double alpha = i * kTwoPi / n_alpha;
    out.alphas[i] = alpha;
    Eigen::Vector2d x = critical_point_at(field, alpha);
    out.points[i] = x;
    out.max_gradient_residual = std::max(
        out.max_gradient_residual, field.grad_x(x[0], x[1], alpha).norm());
    out.max_center_deviation = std::max(out.max_center_deviation, (x - center).norm());
  }
  return out;
}

double validate_delta0(double delta0, int retries) {
  for (int attempt = 0; attempt <= retries; ++attempt) {
    double worst = 0.0;
    for (double s : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95}) {
      double ds = delta_bump(s, delta0);
      for (double phi : {0.0, 2.1}) {
        double a1 = std::sqrt(s) * std::cos(phi), a2 = std::sqrt(s) * std::sin(phi);
        for (double frac : {0.0, 0.9}) {
          double a3 = frac > 0.0 ? std::sqrt(0.9 * ds) : 0.0;
          Vector6d raw;
          raw << a1 * a2, a1, a2, a3, 0.0, 1.0;
          FamilyParameter p{ProjParam::from(raw), DiscParam::polar(0.5, 0.3)};
          FamilyOptions o;
          o.delta0 = delta0;
          FamilyField field(p, o);
          if (!field.has_bump()) continue;
          Eigen::Vector2d c = field.bump_center();
          double radius = (1.0 - s) / 8.0;
          for (int ia = 0; ia < 8; ++ia) {
            double alpha = ia * kTwoPi / 8;
            for (int ir = 0; ir <= 4; ++ir) {
              for (int ip = 0; ip < 8; ++ip) {
                double rr = radius * ir / 4.0, pp = ip * kTwoPi / 8;
                Eigen::Matrix2d h = field.hess_x(c[0] + rr * std::cos(pp),
                                                 c[1] + rr * std::sin(pp), alpha);
                worst = std::max(worst, (h - kSwap).norm());
              }
            }
          }
        }
      }
    }
    if (worst < 0.5) return delta0;
    delta0 *= 0.5;
  }
  throw std::runtime_error("validate_delta0: no admissible amplitude found");
}

RestrictedFunction f_az(const FamilyField& field, const SmoothZeroOptions& zero_options) {
  if (!field.has_bump())
    throw std::invalid_argument("f_az: rho(a,.) is identically zero for this parameter");
  RestrictedFunction out;
  FamilyField local = field;
  out.f = [local](double alpha) {
    Eigen::Vector2d x = critical_point_at(local, alpha);
    return local.evaluate_chart(x[0], x[1], alpha);
  };
  out.zeros = zeros_of_smooth(out.f, zero_options);
  return out;
}

int genus_by_zeros(const SignedZeroData& zeros) {
  int odd = 0;
  for (const auto& z : zeros.multiset.zeros)
    if (z.order % 2 == 1) ++odd;
  return std::max(0, odd / 2 - 1);
}

GenusRecord psi_genus(const FamilyParameter& param, const FamilyOptions& options) {
  GenusRecord rec;
  if (std::fabs(param.a[5]) < 1e-12) {
    rec.branch = GenusRecord::kPhi5Linear;
    rec.genus = 0;
    return rec;
  }
  if (!rho_supported(param.a, options.delta0)) {
    rec.branch = GenusRecord::kRhoZero;
    rec.genus = 0;
    return rec;
  }
  FamilyField field(param, options);
  SmoothZeroOptions zo;
  zo.n_samples = options.alpha_grid;
  RestrictedFunction rf = f_az(field, zo);
  rec.branch = GenusRecord::kImplicit;
  rec.zero_count = static_cast<int>(rf.zeros.multiset.zeros.size());
  rec.zeros_all_simple = true;
  for (const auto& z : rf.zeros.multiset.zeros)
    if (z.order != 1) rec.zeros_all_simple = false;
  rec.unresolved = rf.zeros.unresolved;
  rec.genus = genus_by_zeros(rf.zeros);
  return rec;
}

ParamMap ParamMap::compose(const ParamMap& rhs) const {
  ParamMap out;
  out.a_map = a_map * rhs.a_map;
  out.z_map = z_map * rhs.z_map;
  return out;
}

ParamMap ParamMap::inverse() const {
  ParamMap out;
  out.a_map = a_map.transpose();
  out.z_map = z_map.transpose();
  return out;
}

double ParamMap::distance(const ParamMap& rhs) const {
  return (a_map - rhs.a_map).norm() + (z_map - rhs.z_map).norm();
}

FamilyParameter ParamMap::apply(const FamilyParameter& p) const {
  FamilyParameter out;
  out.a = ProjParam::from(Vector6d(a_map * p.a.a));
  Eigen::Vector2d zv(p.z.r * std::cos(p.z.theta), p.z.r * std::sin(p.z.theta));
  zv = z_map * zv;
  out.z = DiscParam::cartesian({zv[0], zv[1]});
  return out;
}

ParamMap sigma_generator(SigmaGen g) {
  ParamMap m;
  GTildeElement e = (g == SigmaGen::g1_inv) ? gtilde1() : gtilde2();
  m.a_map = e.a_map;
  m.z_map = e.z_map;
  return m;
}

FamilyParameter sigma_action(SigmaGen g, const FamilyParameter& p) {
  return sigma_generator(g).apply(p);
}

FamilyParameter sigma_action(const std::vector<int>& word, const FamilyParameter& p) {
  std::vector<ParamMap> gens = {sigma_generator(SigmaGen::g1_inv),
                                sigma_generator(SigmaGen::g2_inv)};
  return evaluate_word(gens, word).apply(p);
}

double equivariance_residual(const FamilyParameter& param, ChartGen g, int sample_count,
                             std::uint64_t seed, const FamilyOptions& options) {
  SigmaGen sg = (g == ChartGen::g1) ? SigmaGen::g1_inv : SigmaGen::g2_inv;
  FamilyParameter mapped = sigma_action(sg, param);
  FamilyField f_orig(param, options);
  FamilyField f_mapped(mapped, options);
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < sample_count; ++i) {
    Eigen::Vector4d v = rng.unit_vector<4>();
    bool collapsed = false;
    ChartPoint p = r4_to_chart(v, &collapsed);
    if (collapsed) continue;
    double lhs = f_mapped.evaluate_chart(p);
    double rhs = f_orig.evaluate_chart(act_on_chart(g, p));
    worst = std::max(worst, std::fabs(lhs + rhs));
  }
  return worst;
}

double rho_symmetry_residual(ChartGen g, int sample_count, std::uint64_t seed,
                             double delta0) {
  GTildeElement e = (g == ChartGen::g1) ? gtilde1() : gtilde2();
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < sample_count; ++i) {
    // Bias half the samples toward the bump-supported region of RP^5.
    Vector6d raw;
    if (i % 2 == 0) {
      raw = rng.unit_vector<6>();
    } else {
      double s = rng.uniform(0.0, 0.8);
      double phi = rng.angle();
      double a1 = std::sqrt(s) * std::cos(phi), a2 = std::sqrt(s) * std::sin(phi);
      double ds = delta_bump(s, delta0);
      double eps = rng.uniform(0.0, 0.9) * std::sqrt(ds);
      double dir = rng.angle();
      raw << a1 * a2 + eps * 0.2, a1, a2, eps * std::cos(dir), eps * std::sin(dir), 1.0;
    }
    ProjParam a = ProjParam::from(raw);
    double r = std::sqrt(rng.uniform(0.0, 1.0));
    double phi = rng.angle();
    double x1 = r * std::cos(phi), x2 = r * std::sin(phi);
    double gx1, gx2;
    if (g == ChartGen::g1) {
      gx1 = -x2;
      gx2 = x1;
    } else {
      gx1 = -x1;
      gx2 = x2;
    }
    double lhs = rho(a, gx1, gx2, delta0);
    double rhs = rho(ProjParam::from(Vector6d(e.a_map * a.a)), x1, x2, delta0);
    worst = std::max(worst, std::fabs(lhs - rhs));
  }
  return worst;
}

std::function<double(const Eigen::Vector4d&)> xi_field(const FamilyParameter& param,
                                                       const Isometry4& rotation,
                                                       const FamilyOptions& options) {
  FamilyField field(param, options);
  Eigen::Matrix4d rinv = rotation.matrix().transpose();
  return [field, rinv](const Eigen::Vector4d& p) { return field.evaluate_r4(rinv * p); };
}

}  // namespace s3fam
