// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "s3fam/chart.hpp"
#include "s3fam/isometry4.hpp"
#include "s3fam/trigpoly.hpp"

namespace s3fam {

using Vector6d = Eigen::Matrix<double, 6, 1>;

/// A point of RP^5, stored as the unit-norm representative whose first
/// nonzero coordinate is positive.
struct ProjParam {
  Vector6d a = (Vector6d() << 0, 0, 0, 0, 0, 1).finished();

  static ProjParam from(const Vector6d& raw);
  static ProjParam from(std::initializer_list<double> raw);

  double operator[](int i) const { return a[i]; }
  /// Distance between projective points: min over representative signs.
  double proj_distance(const ProjParam& rhs) const;
};

/// z = r e^{i theta} in the closed unit disc.
struct DiscParam {
  double r = 0.0;
  double theta = 0.0;

  static DiscParam polar(double r, double theta);
  static DiscParam cartesian(std::complex<double> z);
  std::complex<double> z() const { return std::polar(r, theta); }
  bool on_boundary(double tol = 1e-12) const { return r >= 1.0 - tol; }
};

struct FamilyParameter {
  ProjParam a;
  DiscParam z;
};

/// Global knobs for the family: the bump amplitude delta0 and the solver
/// settings of the critical-curve contraction.
struct FamilyOptions {
  double delta0 = 1e-4;
  double fp_tolerance = 1e-12;
  int fp_max_iterations = 200;
  int alpha_grid = 4096;
};

/// The cut-off rho(a, x): case (I) when a5 != 0 and a1^2 + a2^2 < a5^2,
/// otherwise identically 0. Invariant under a -> lambda a.
double rho(const ProjParam& a, double x1, double x2, double delta0 = 1e-4);

/// True when rho(a, .) is not the zero function.
bool rho_supported(const ProjParam& a, double delta0 = 1e-4);

/// Evaluator for F_{a,z} with per-parameter constants precomputed. Valid only
/// on the implicit branch a5 != 0 (construction throws otherwise).
class FamilyField {
 public:
  FamilyField(const FamilyParameter& param, const FamilyOptions& options = {});

  const FamilyParameter& parameter() const { return param_; }
  const FamilyOptions& options() const { return options_; }
  bool has_bump() const { return bump_factor_ > 0.0; }
  /// Center (-a2, -a1)/a5 of the bump support (a normalized to a5 = 1).
  Eigen::Vector2d bump_center() const { return center_; }
  /// kappa(a) = (1 - sqrt(a1^2 + a2^2))/4 for the a5 = 1 representative.
  double kappa() const { return kappa_; }

  double evaluate_chart(double x1, double x2, double alpha) const;
  double evaluate_chart(const ChartPoint& p) const { return evaluate_chart(p.x1, p.x2, p.alpha); }
  /// Evaluation at an R^4 point of S^3 (fast path skips the bump term when
  /// the point is outside its support).
  double evaluate_r4(const Eigen::Vector4d& p) const;

  /// d/d(x1,x2) of F at fixed alpha (analytic).
  Eigen::Vector2d grad_x(double x1, double x2, double alpha) const;
  /// Hessian in (x1, x2) by finite differences of the analytic gradient.
  Eigen::Matrix2d hess_x(double x1, double x2, double alpha, double h = 1e-6) const;

  /// rho at (x1, x2) for this parameter.
  double rho_at(double x1, double x2) const;

  /// Upper bound for |grad F| over S^3 (ambient, for the normalized
  /// evaluation), used to prune level-set extraction rigorously.
  double ambient_lipschitz_bound() const;

 private:
  FamilyParameter param_;
  FamilyOptions options_;
  Vector6d a_;             // normalized so a5 = 1
  Eigen::Vector2d center_;
  double kappa_ = 0.0;
  double bump_factor_ = 0.0;   // delta(s) * zeta2, constant in x
  double zeta1_scale_ = 0.0;   // 64 / (1 - a1^2 - a2^2)^2
  double support_radius2_ = 0.0;
  double trig_r_ = 0.0, trig_theta_ = 0.0;
};

/// Classification of the quadratic zero set Phi_5(a).
struct Phi5Class {
  enum Kind {
    kEmpty,              // no intersection with S^3
    kAffineSphere,       // a5 = 0: a round 2-sphere (or a point)
    kSingularPair,       // a in A_sing: two spheres crossing along a circle
    kSpherePair,         // a0 = a1 a2, a3 = a4 = 0, a1^2 + a2^2 >= a5^2
    kRegular,            // genus 0, transverse away from at most 9 points
  };
  Kind kind = kRegular;
  bool in_a_sing = false;
  Eigen::Vector2d singular_circle_center{0, 0};  // {x1 = c[0], x2 = c[1]}
  int expected_genus = 0;
  int max_nontransverse_points = 9;
};

Phi5Class classify_phi5(const ProjParam& a, double tol = 1e-12);

/// The fiberwise critical curve alpha -> x_a(alpha), found by the contraction
/// y -> y - M grad_x F(center + y, alpha), M = [[0,1],[1,0]].
struct CriticalCurve {
  std::vector<double> alphas;
  std::vector<Eigen::Vector2d> points;
  double max_gradient_residual = 0.0;
  double max_center_deviation = 0.0;
  bool converged = true;
  std::string diagnostic;
};

class NonContraction : public std::runtime_error {
 public:
  explicit NonContraction(const std::string& what) : std::runtime_error(what) {}
};

/// Solves the critical point at a single alpha. Throws NonContraction if the
/// iteration fails to converge.
Eigen::Vector2d critical_point_at(const FamilyField& field, double alpha);

CriticalCurve critical_curve(const FamilyField& field, int n_alpha = 4096);

/// Preflight for delta0: measures max ||hess_x F - M|| over the bump support
/// for a sweep of parameters; halves delta0 until the bound is < 1/2.
/// Returns the validated delta0 (at most `retries` halvings).
double validate_delta0(double delta0, int retries = 20);

/// f_{a,z}(alpha) = F(x_a(alpha), alpha) and its zero analysis.
struct RestrictedFunction {
  std::function<double(double)> f;
  SignedZeroData zeros;
};

RestrictedFunction f_az(const FamilyField& field, const SmoothZeroOptions& zero_options = {});

/// Genus bound from the zero census: max(0, #odd-order zeros / 2 - 1).
/// Exact genus when every zero has order 1.
int genus_by_zeros(const SignedZeroData& zeros);

/// Which branch produced a genus value.
struct GenusRecord {
  enum Branch { kRhoZero, kPhi5Linear, kImplicit };
  Branch branch = kImplicit;
  int genus = 0;
  int zero_count = 0;        // implicit branch only
  bool zeros_all_simple = false;
  bool unresolved = false;
};

GenusRecord psi_genus(const FamilyParameter& param, const FamilyOptions& options = {});

// --- The sigma action of D24 on RP^5 x D ------------------------------------

/// A parameter-space transform (6x6 orthogonal on a, 2x2 orthogonal on z).
struct ParamMap {
  Eigen::Matrix<double, 6, 6> a_map = Eigen::Matrix<double, 6, 6>::Identity();
  Eigen::Matrix2d z_map = Eigen::Matrix2d::Identity();

  static ParamMap identity() { return {}; }
  ParamMap compose(const ParamMap& rhs) const;
  ParamMap inverse() const;
  double distance(const ParamMap& rhs) const;
  FamilyParameter apply(const FamilyParameter& p) const;
};

enum class SigmaGen { g1_inv, g2_inv };

/// sigma(g1^-1), sigma(g2^-1) as ParamMaps.
ParamMap sigma_generator(SigmaGen g);
FamilyParameter sigma_action(SigmaGen g, const FamilyParameter& p);
/// Word over {1 -> sigma(g1^-1), 2 -> sigma(g2^-1)}, negatives for inverses.
FamilyParameter sigma_action(const std::vector<int>& word, const FamilyParameter& p);

/// max over random p in S^3 of |F_{sigma(g^-1)(a,z)}(p) + F_{a,z}(g p)|.
double equivariance_residual(const FamilyParameter& param, ChartGen g, int sample_count,
                             std::uint64_t seed, const FamilyOptions& options = {});

/// max over random (a, x) of the rho symmetry defect
/// |rho(a, g x) - rho(g^-1 a, x)| for the given generator.
double rho_symmetry_residual(ChartGen g, int sample_count, std::uint64_t seed,
                             double delta0 = 1e-4);

/// p -> F_{a,z}(R^-1 p): the rotated member of the 13-parameter family.
std::function<double(const Eigen::Vector4d&)> xi_field(const FamilyParameter& param,
                                                       const Isometry4& rotation,
                                                       const FamilyOptions& options = {});

}  // namespace s3fam
