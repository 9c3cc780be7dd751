// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include <Eigen/Dense>

#include "s3fam/cutoffs.hpp"
#include "s3fam/family.hpp"
#include "s3fam/group_closure.hpp"
#include "s3fam/groups_catalog.hpp"
#include "s3fam/rng.hpp"

using namespace s3fam;

namespace {

// Independent oracle: full 2-D Newton on grad_x F = 0 from the bump center.
Eigen::Vector2d newton_critical_point(const FamilyField& field, double alpha) {
  Eigen::Vector2d x = field.bump_center();
  for (int it = 0; it < 100; ++it) {
    Eigen::Vector2d g = field.grad_x(x[0], x[1], alpha);
    if (g.norm() < 1e-13) break;
    Eigen::Matrix2d h = field.hess_x(x[0], x[1], alpha);
    x -= h.fullPivLu().solve(g);
  }
  return x;
}

FamilyParameter near_singular_param(double a1, double a2, double eps0, double eps3,
                                    double eps4, double r, double theta) {
  Vector6d raw;
  raw << a1 * a2 + eps0, a1, a2, eps3, eps4, 1.0;
  return {ProjParam::from(raw), DiscParam::polar(r, theta)};
}

}  // namespace

TEST_CASE("zeta plateaus and monotonicity") {
  CHECK(zeta(0.0) == 1.0);
  CHECK(zeta(0.5) == 1.0);
  CHECK(zeta(-3.0) == 1.0);
  CHECK(zeta(1.0) == 0.0);
  CHECK(zeta(2.0) == 0.0);
  double mid = zeta(0.75);
  CHECK(mid > 0.0);
  CHECK(mid < 1.0);
  double prev = 1.0;
  for (int i = 0; i <= 100; ++i) {
    double v = zeta(0.4 + 0.7 * i / 100.0);
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
}

TEST_CASE("delta bump: plateau values and decay") {
  const double d0 = 1e-4;
  CHECK(delta_bump(1.0, d0) == 0.0);
  CHECK(delta_bump(-1.0, d0) == 0.0);
  CHECK(delta_bump(0.0, d0) == d0);
  CHECK(delta_bump(0.99, d0) < 1e-30);
  for (double s : {0.1, 0.3, 0.5, 0.7}) CHECK(delta_bump(s, d0) > 0.0);
  // Decays faster than kappa^10 = ((1-sqrt(s))/4)^10 toward s = 1.
  for (double s : {0.95, 0.97, 0.98}) {
    double kappa = (1.0 - std::sqrt(s)) / 4.0;
    CHECK(delta_bump(s, d0) < std::pow(kappa, 10));
  }
}

TEST_CASE("rho closed-form values") {
  const double d0 = 1e-4;
  ProjParam center = ProjParam::from({0, 0, 0, 0, 0, 1});
  CHECK(rho(center, 0.0, 0.0, d0) == doctest::Approx(d0).epsilon(1e-12));
  // a5 = 0: case (II)
  ProjParam flat = ProjParam::from({1, 0, 0, 0, 0, 0});
  CHECK(rho(flat, 0.3, 0.1, d0) == 0.0);
  // outside the support disc
  CHECK(rho(center, 0.9, 0.0, d0) == 0.0);
}

TEST_CASE("rho support bound and projective invariance") {
  Rng rng(31);
  const double d0 = 1e-4;
  for (int i = 0; i < 500; ++i) {
    Vector6d raw = rng.unit_vector<6>();
    ProjParam a = ProjParam::from(raw);
    ProjParam b = ProjParam::from(Vector6d(-3.7 * raw));
    double x1 = rng.uniform(-1, 1), x2 = rng.uniform(-1, 1);
    if (x1 * x1 + x2 * x2 > 1) continue;
    double va = rho(a, x1, x2, d0);
    CHECK(va == rho(b, x1, x2, d0));
    // support: rho = 0 outside the stated disc
    double a5 = a[5];
    if (a5 != 0.0) {
      double u = (a5 * x1 + a[2]) * (a5 * x1 + a[2]) + (a5 * x2 + a[1]) * (a5 * x2 + a[1]);
      double rhs = std::pow(a5 * a5 - a[1] * a[1] - a[2] * a[2], 2) / (64 * a5 * a5);
      if (a[1] * a[1] + a[2] * a[2] < a5 * a5 && u >= rhs) CHECK(va == 0.0);
    }
  }
}

TEST_CASE("F closed-form values") {
  const FamilyOptions opt;
  // a = [0:...:0:1], z = 0, x = (0,0): F = delta0 cos(3 alpha)
  FamilyField f1({ProjParam::from({0, 0, 0, 0, 0, 1}), DiscParam::polar(0, 0)}, opt);
  for (double alpha : {0.0, 0.4, 1.7, 3.0}) {
    CHECK(f1.evaluate_chart(0, 0, alpha) ==
          doctest::Approx(opt.delta0 * std::cos(3 * alpha)).epsilon(1e-12));
  }
  // a = [1:0:...:0:1]: rho == 0, F = 1 + x1 x2
  FamilyField f2({ProjParam::from({1, 0, 0, 0, 0, 1}), DiscParam::polar(0.5, 1.0)}, opt);
  CHECK(!f2.has_bump());
  CHECK(f2.evaluate_chart(0.3, -0.2, 2.0) == doctest::Approx(1.0 + 0.3 * -0.2));
  // a = [0:1:0:0:0:1]: F = x1 + x1 x2 where rho = 0
  FamilyField f3({ProjParam::from({0, 1, 0, 0, 0, 1}), DiscParam::polar(0.5, 1.0)}, opt);
  CHECK(f3.evaluate_chart(0.3, -0.2, 2.0) == doctest::Approx(0.3 + 0.3 * -0.2));
  // chart and R^4 evaluations agree
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    double r = std::sqrt(rng.uniform(0.0, 0.99));
    double phi = rng.angle(), alpha = rng.angle();
    ChartPoint p{r * std::cos(phi), r * std::sin(phi), alpha};
    CHECK(f1.evaluate_chart(p) == doctest::Approx(f1.evaluate_r4(chart_to_r4(p))).epsilon(1e-12));
  }
  // a5 = 0 goes through classify_phi5, never through F
  CHECK_THROWS_AS(FamilyField({ProjParam::from({1, 0, 0, 0, 0, 0}), DiscParam::polar(0, 0)}, opt),
                  std::invalid_argument);
}

TEST_CASE("classify_phi5") {
  auto c1 = classify_phi5(ProjParam::from({0, 0, 0, 0, 0, 1}));
  CHECK(c1.kind == Phi5Class::kSingularPair);
  CHECK(c1.in_a_sing);
  CHECK(c1.singular_circle_center.norm() < 1e-14);

  auto c2 = classify_phi5(ProjParam::from({1, 0, 0, 0, 0, 0}));
  CHECK(c2.kind == Phi5Class::kEmpty);

  auto c3 = classify_phi5(ProjParam::from({0, 1, 0, 0, 0, 0}));
  CHECK(c3.kind == Phi5Class::kAffineSphere);
  CHECK(c3.expected_genus == 0);

  // A_sing with offset circle
  auto c4 = classify_phi5(ProjParam::from({0.3 * 0.2, 0.3, 0.2, 0, 0, 1}));
  CHECK(c4.in_a_sing);
  CHECK((c4.singular_circle_center - Eigen::Vector2d(-0.2, -0.3)).norm() < 1e-12);

  auto c5 = classify_phi5(ProjParam::from({0.1, 0.2, 0.3, 0.4, 0.5, 1}));
  CHECK(c5.kind == Phi5Class::kRegular);
  CHECK(c5.expected_genus == 0);
  CHECK(c5.max_nontransverse_points == 9);
}

TEST_CASE("critical curve: centered parameter is exact") {
  FamilyField field({ProjParam::from({0, 0, 0, 0, 0, 1}), DiscParam::polar(0, 0)}, {});
  CriticalCurve c = critical_curve(field, 64);
  CHECK(c.max_center_deviation < 1e-13);
  CHECK(c.max_gradient_residual < 1e-11);
}

TEST_CASE("critical curve: perturbed parameter vs Newton oracle") {
  const double eps = 1e-4;
  FamilyParameter p = near_singular_param(0.3, 0.2, 0.0, eps, 0.0, 0.5, 0.3);
  FamilyField field(p, {});
  REQUIRE(field.has_bump());
  CriticalCurve c = critical_curve(field, 256);
  CHECK(c.max_gradient_residual < 1e-11);
  // |x_a - center| <= C (|a3| + |a4|) with observed C = O(1)
  CHECK(c.max_center_deviation <= 10 * eps);
  CHECK(c.max_center_deviation <= field.kappa() / 4.0);
  for (int i = 0; i < 256; i += 16) {
    Eigen::Vector2d oracle = newton_critical_point(field, c.alphas[i]);
    CHECK((c.points[i] - oracle).norm() < 1e-10);
  }
}

TEST_CASE("delta0 preflight accepts the default amplitude") {
  double validated = validate_delta0(1e-4);
  CHECK(validated == doctest::Approx(1e-4));
}

TEST_CASE("f_az closed forms and zero counts") {
  FamilyOptions opt;
  // z = 0: f = delta0 cos(3 alpha), 6 simple zeros
  FamilyField f1({ProjParam::from({0, 0, 0, 0, 0, 1}), DiscParam::polar(0, 0)}, opt);
  RestrictedFunction r1 = f_az(f1);
  CHECK(!r1.zeros.unresolved);
  REQUIRE(r1.zeros.multiset.zeros.size() == 6);
  for (int j = 0; j < 6; ++j) {
    CHECK(r1.zeros.multiset.zeros[j].order == 1);
    CHECK(dist_s1(r1.zeros.multiset.zeros[j].alpha, kPi / 6 + j * kPi / 3) < 1e-9);
  }
  for (double alpha : {0.2, 1.1, 4.4}) {
    CHECK(r1.f(alpha) == doctest::Approx(opt.delta0 * std::cos(3 * alpha)).epsilon(1e-10));
  }

  // z = e^{i theta}: f = delta0 cos(theta + 2 alpha), 4 simple zeros
  double theta = 0.9;
  FamilyField f2({ProjParam::from({0, 0, 0, 0, 0, 1}), DiscParam::polar(1.0, theta)}, opt);
  RestrictedFunction r2 = f_az(f2);
  REQUIRE(r2.zeros.multiset.zeros.size() == 4);
  for (const auto& z : r2.zeros.multiset.zeros) {
    CHECK(z.order == 1);
    CHECK(std::fabs(std::cos(theta + 2 * z.alpha)) < 1e-9);
  }

  // rho == 0 violates the precondition
  FamilyField f3({ProjParam::from({1, 0, 0, 0, 0, 1}), DiscParam::polar(0, 0)}, opt);
  CHECK_THROWS_AS(f_az(f3), std::invalid_argument);
}

TEST_CASE("genus_by_zeros") {
  auto mk = [](int n) {
    SignedZeroData d;
    for (int i = 0; i < n; ++i) d.multiset.zeros.push_back({i * kTwoPi / n, 1});
    d.n_counts.assign(n, 1);
    return d;
  };
  CHECK(genus_by_zeros(mk(6)) == 2);
  CHECK(genus_by_zeros(mk(4)) == 1);
  CHECK(genus_by_zeros(mk(0)) == 0);
}

TEST_CASE("psi_genus branches") {
  // Central parameter, interior z: genus 2
  GenusRecord g1 = psi_genus({ProjParam::from({0, 0, 0, 0, 0, 1}), DiscParam::polar(0, 0)});
  CHECK(g1.branch == GenusRecord::kImplicit);
  CHECK(g1.genus == 2);
  CHECK(g1.zero_count == 6);

  // Boundary z: genus 1
  for (double theta : {0.0, 0.7, 2.0}) {
    GenusRecord g = psi_genus({ProjParam::from({0, 0, 0, 0, 0, 1}), DiscParam::polar(1, theta)});
    CHECK(g.genus == 1);
    CHECK(g.zero_count == 4);
    CHECK(g.zeros_all_simple);
  }

  // Linear branch
  GenusRecord g0 = psi_genus({ProjParam::from({1, 0, 0, 0, 0, 0}), DiscParam::polar(0.4, 1.0)});
  CHECK(g0.branch == GenusRecord::kPhi5Linear);
  CHECK(g0.genus == 0);

  // rho == 0 branch
  GenusRecord gr = psi_genus({ProjParam::from({1, 0, 0, 0, 0, 1}), DiscParam::polar(0.4, 1.0)});
  CHECK(gr.branch == GenusRecord::kRhoZero);
  CHECK(gr.genus == 0);
}

TEST_CASE("sigma action closed forms") {
  // sigma(g2^-1)([0:...:0:1], r e^{i theta}) = (same projective point, r e^{i(pi-theta)})
  FamilyParameter p{ProjParam::from({0, 0, 0, 0, 0, 1}), DiscParam::polar(0.6, 0.8)};
  FamilyParameter q = sigma_action(SigmaGen::g2_inv, p);
  CHECK(q.a.proj_distance(p.a) < 1e-14);
  CHECK(q.z.r == doctest::Approx(0.6));
  CHECK(dist_s1(q.z.theta, kPi - 0.8) < 1e-12);

  // sigma(g1^-1)([0:0:0:1:0:1], z) = ([0:0:0:cos(pi/3):-sin(pi/3):-1], e^{-i pi/3} z)
  FamilyParameter p2{ProjParam::from({0, 0, 0, 1, 0, 1}), DiscParam::polar(0.5, 0.2)};
  FamilyParameter q2 = sigma_action(SigmaGen::g1_inv, p2);
  ProjParam expected = ProjParam::from({0, 0, 0, 0.5, -std::sqrt(3.0) / 2, -1});
  CHECK(q2.a.proj_distance(expected) < 1e-12);
  CHECK(dist_s1(q2.z.theta, wrap_angle(0.2 - kPi / 3)) < 1e-12);

  // sigma(g1^-1)^12 = id on random parameters
  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    FamilyParameter r{ProjParam::from(Vector6d(rng.unit_vector<6>())),
                      DiscParam::polar(std::sqrt(rng.uniform(0, 1)), rng.angle())};
    FamilyParameter s = sigma_action(word_pow(1, 12), r);
    CHECK(s.a.proj_distance(r.a) < 1e-12);
    CHECK(std::fabs(s.z.r - r.z.r) < 1e-12);
    if (r.z.r > 1e-6) CHECK(dist_s1(s.z.theta, r.z.theta) < 1e-9);
  }
}

TEST_CASE("equivariance of F under both generators") {
  // The central parameter first, then random members of the implicit branch.
  FamilyParameter center{ProjParam::from({0, 0, 0, 0, 0, 1}), DiscParam::polar(0, 0)};
  CHECK(equivariance_residual(center, ChartGen::g1, 1000, 41) < 1e-10);
  CHECK(equivariance_residual(center, ChartGen::g2, 1000, 42) < 1e-10);

  Rng rng(34);
  for (int i = 0; i < 20; ++i) {
    Vector6d raw = rng.unit_vector<6>();
    if (std::fabs(raw[5]) < 0.1) continue;
    FamilyParameter p{ProjParam::from(raw),
                      DiscParam::polar(std::sqrt(rng.uniform(0, 1)), rng.angle())};
    CHECK(equivariance_residual(p, ChartGen::g1, 50, 100 + i) < 1e-10);
    CHECK(equivariance_residual(p, ChartGen::g2, 50, 200 + i) < 1e-10);
  }
  // Near-singular parameters exercise the bump term.
  for (int i = 0; i < 10; ++i) {
    double s = rng.uniform(0.0, 0.6);
    double phi = rng.angle();
    double ds = delta_bump(s, 1e-4);
    FamilyParameter p = near_singular_param(
        std::sqrt(s) * std::cos(phi), std::sqrt(s) * std::sin(phi),
        0.2 * std::sqrt(ds) * rng.uniform(-1, 1), 0.2 * std::sqrt(ds) * rng.uniform(-1, 1),
        0.2 * std::sqrt(ds) * rng.uniform(-1, 1), std::sqrt(rng.uniform(0, 1)), rng.angle());
    CHECK(equivariance_residual(p, ChartGen::g1, 100, 300 + i) < 1e-10);
    CHECK(equivariance_residual(p, ChartGen::g2, 100, 400 + i) < 1e-10);
  }
}

TEST_CASE("rho symmetry identities") {
  CHECK(rho_symmetry_residual(ChartGen::g1, 1000, 43) < 1e-12);
  CHECK(rho_symmetry_residual(ChartGen::g2, 1000, 44) < 1e-12);
}

TEST_CASE("xi: rotated members and the sweepout sign flip") {
  FamilyParameter p{ProjParam::from({0, 0, 0, 0, 0, 1}), DiscParam::polar(0, 0)};
  FamilyField field(p, {});

  // R = identity reproduces F
  auto xi_id = xi_field(p, Isometry4::identity());
  Rng rng(35);
  for (int i = 0; i < 100; ++i) {
    Eigen::Vector4d v = rng.unit_vector<4>();
    CHECK(xi_id(v) == doctest::Approx(field.evaluate_r4(v)).epsilon(1e-12));
  }

  // Xi((a,z,R).g) = -Xi(a,z,R) pointwise (zero sets agree)
  Isometry4 r = Isometry4::from_pair(Quaternion::from_vec4(rng.unit_vector<4>()),
                                     Quaternion::from_vec4(rng.unit_vector<4>()));
  for (ChartGen g : {ChartGen::g1, ChartGen::g2}) {
    SigmaGen sg = g == ChartGen::g1 ? SigmaGen::g1_inv : SigmaGen::g2_inv;
    Isometry4 giso = g == ChartGen::g1 ? d24_g1() : d24_g2();
    auto xi_orig = xi_field(p, r);
    auto xi_acted = xi_field(sigma_action(sg, p), r.compose(giso));
    for (int i = 0; i < 200; ++i) {
      Eigen::Vector4d v = rng.unit_vector<4>();
      CHECK(xi_acted(v) == doctest::Approx(-xi_orig(v)).epsilon(1e-11));
    }
  }

  // F_{[0:...:1],0} o g1 = -F_{[0:...:1],0}
  Isometry4 g1 = d24_g1();
  for (int i = 0; i < 200; ++i) {
    Eigen::Vector4d v = rng.unit_vector<4>();
    CHECK(field.evaluate_r4(g1.apply(v)) == doctest::Approx(-field.evaluate_r4(v)).epsilon(1e-11));
  }
}
