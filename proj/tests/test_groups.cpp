// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include <Eigen/LU>

#include "s3fam/angles.hpp"
#include "s3fam/chart.hpp"
#include "s3fam/group_closure.hpp"
#include "s3fam/groups_catalog.hpp"
#include "s3fam/isometry4.hpp"
#include "s3fam/quaternion.hpp"
#include "s3fam/rng.hpp"

using namespace s3fam;

TEST_CASE("quaternion algebra") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Quaternion a = Quaternion::from_vec4(rng.unit_vector<4>());
    Quaternion b = Quaternion::from_vec4(rng.unit_vector<4>());
    Quaternion c = Quaternion::from_vec4(rng.unit_vector<4>());
    // associativity
    CHECK(((a * b) * c).distance(a * (b * c)) < 1e-14);
    // (ab)^-1 = b^-1 a^-1
    CHECK((a * b).inverse().distance(b.inverse() * a.inverse()) < 1e-14);
    // unit norm preserved
    CHECK(std::fabs((a * b).norm() - 1.0) < 1e-14);
  }
}

TEST_CASE("pair-induced matrices lie in SO(4)") {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    Quaternion q1 = Quaternion::from_vec4(rng.unit_vector<4>());
    Quaternion q2 = Quaternion::from_vec4(rng.unit_vector<4>());
    Isometry4 iso = Isometry4::from_pair(q1, q2);
    CHECK(iso.so4_residual() < 1e-12);
  }
}

TEST_CASE("pair and matrix forms agree; pair recoverable up to sign") {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    Quaternion q1 = Quaternion::from_vec4(rng.unit_vector<4>());
    Quaternion q2 = Quaternion::from_vec4(rng.unit_vector<4>());
    Isometry4 iso = Isometry4::from_pair(q1, q2);
    Eigen::Vector4d p = rng.unit_vector<4>();
    Eigen::Vector4d via_quat =
        (q1 * Quaternion::from_vec4(p) * q2.inverse()).to_vec4();
    CHECK((iso.apply(p) - via_quat).norm() < 1e-13);

    Isometry4 matrix_only(iso.matrix());
    auto [r1, r2] = matrix_only.pair_from_matrix();
    double direct = r1.distance(q1) + r2.distance(q2);
    double flipped = r1.distance(-q1) + r2.distance(-q2);
    CHECK(std::min(direct, flipped) < 1e-12);
  }
}

TEST_CASE("chart round trips") {
  // (0,0,0) -> (0,0,1,0)
  CHECK((chart_to_r4({0, 0, 0}) - Eigen::Vector4d(0, 0, 1, 0)).norm() < 1e-15);
  // sigma = 0 collapses the circle: any alpha gives (1,0,0,0)
  for (double a : {0.0, 1.0, 2.5}) {
    CHECK((chart_to_r4({1, 0, a}) - Eigen::Vector4d(1, 0, 0, 0)).norm() < 1e-15);
  }
  // (0.6, 0, pi/2) -> (0.6, 0, 0, 0.8)
  CHECK((chart_to_r4({0.6, 0, kPi / 2}) - Eigen::Vector4d(0.6, 0, 0, 0.8)).norm() < 1e-15);

  CHECK_THROWS_AS(chart_to_r4({0.9, 0.9, 0.0}), std::domain_error);

  Rng rng(14);
  for (int i = 0; i < 500; ++i) {
    double r = std::sqrt(rng.uniform(0.0, 0.98));
    double phi = rng.angle();
    ChartPoint p{r * std::cos(phi), r * std::sin(phi), rng.angle()};
    bool collapsed = false;
    ChartPoint q = r4_to_chart(chart_to_r4(p), &collapsed);
    CHECK(!collapsed);
    CHECK(std::fabs(p.x1 - q.x1) < 1e-14);
    CHECK(std::fabs(p.x2 - q.x2) < 1e-14);
    CHECK(dist_s1(p.alpha, q.alpha) < 1e-12);
    CHECK(std::fabs(chart_to_r4(p).norm() - 1.0) < 1e-14);
  }
}

TEST_CASE("generator actions in chart coordinates") {
  // g1: (1,0,0) -> (0,1,pi/3)
  ChartPoint p1 = act_on_chart(ChartGen::g1, {1, 0, 0});
  CHECK(p1.x1 == doctest::Approx(0.0));
  CHECK(p1.x2 == doctest::Approx(1.0));
  CHECK(dist_s1(p1.alpha, kPi / 3) < 1e-15);

  // g2: (0,0,alpha) -> (0,0,pi-alpha)
  ChartPoint p2 = act_on_chart(ChartGen::g2, {0, 0, 0.7});
  CHECK(dist_s1(p2.alpha, kPi - 0.7) < 1e-15);

  // g1 applied 12 times is the identity on samples
  Rng rng(15);
  for (int i = 0; i < 50; ++i) {
    double r = std::sqrt(rng.uniform(0.0, 0.9));
    double phi = rng.angle();
    ChartPoint p{r * std::cos(phi), r * std::sin(phi), rng.angle()};
    ChartPoint q = p;
    for (int k = 0; k < 12; ++k) q = act_on_chart(ChartGen::g1, q);
    CHECK(std::fabs(p.x1 - q.x1) < 1e-12);
    CHECK(std::fabs(p.x2 - q.x2) < 1e-12);
    CHECK(dist_s1(p.alpha, q.alpha) < 1e-12);
  }
}

TEST_CASE("chart action agrees with the isometry action off the collapsed circle") {
  Rng rng(16);
  Isometry4 g1 = d24_g1(), g2 = d24_g2();
  for (int i = 0; i < 500; ++i) {
    double r = std::sqrt(rng.uniform(0.0, 0.95));
    double phi = rng.angle();
    ChartPoint p{r * std::cos(phi), r * std::sin(phi), rng.angle()};
    Eigen::Vector4d v = chart_to_r4(p);
    CHECK((g1.apply(v) - chart_to_r4(act_on_chart(ChartGen::g1, p))).norm() < 1e-12);
    CHECK((g2.apply(v) - chart_to_r4(act_on_chart(ChartGen::g2, p))).norm() < 1e-12);
  }
}

TEST_CASE("g1 and g2 preserve orientation") {
  CHECK(d24_g1().matrix().determinant() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d24_g2().matrix().determinant() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("closure sizes: D24, Q48, and the order-96 parameter group") {
  auto d24 = group_closure<Isometry4>({d24_g1(), d24_g2()}, 1e-9);
  CHECK(d24.elements.size() == 24);

  auto q48 = group_closure<QuatPair>({ghat1(), ghat2()}, 1e-9);
  CHECK(q48.elements.size() == 48);

  auto g96 = group_closure<GTildeElement>({gtilde0(), gtilde1(), gtilde2()}, 1e-9);
  CHECK(g96.elements.size() == 96);

  auto trivial = group_closure<Isometry4>({Isometry4::identity()}, 1e-9);
  CHECK(trivial.elements.size() == 1);
}

TEST_CASE("closure cap yields a diagnostic") {
  // An irrational rotation never closes; the cap must fire.
  Quaternion q = Quaternion::exp_i(0.5);
  CHECK_THROWS_AS(group_closure<QuatPair>({QuatPair{q, Quaternion()}}, 1e-9, 100),
                  ClosureOverflow);
}

TEST_CASE("defining relations of D24") {
  std::vector<Isometry4> gens = {d24_g1(), d24_g2()};
  auto res = verify_relations(gens, {word_pow(1, 12),
                                     word_pow(2, 2),
                                     {2, 1, 2, 1}});
  for (const auto& r : res) CHECK(r.residual < 1e-12);
}

TEST_CASE("double cover kernel: (-1,-1) maps to the identity matrix") {
  Quaternion minus_one(-1, 0, 0, 0);
  Isometry4 iso = Isometry4::from_pair(minus_one, minus_one);
  CHECK(iso.distance(Isometry4::identity()) < 1e-15);
  // ghat1^12 = (-1,-1), the nontrivial kernel element of the cover
  auto p = evaluate_word<QuatPair>({ghat1()}, word_pow(1, 12));
  CHECK(p.q1.distance(minus_one) < 1e-12);
  CHECK(p.q2.distance(minus_one) < 1e-12);
}

TEST_CASE("h-relations hold as transforms of (S^3 x S^3) x R") {
  std::vector<HTransform> gens = {h0(), h1(), h2()};
  // h1^24 h0^4, h1^12 h0^2 h2^-2, h1 h2 h1 h2^-1, h0 h1 h0^-1 h1^-1, h0 h2 h0 h2^-1
  std::vector<std::vector<int>> words = {
      word_concat({word_pow(2, 24), word_pow(1, 4)}),
      word_concat({word_pow(2, 12), word_pow(1, 2), {-3, -3}}),
      {2, 3, 2, -3},
      {1, 2, -1, -2},
      {1, 3, 1, -3},
  };
  for (const auto& r : verify_relations(gens, words)) CHECK(r.residual < 1e-12);

  // The same relations, evaluated pointwise on 100 random points.
  Rng rng(17);
  for (const auto& w : words) {
    HTransform t = evaluate_word(gens, w);
    for (int i = 0; i < 100; ++i) {
      QuatPair q{Quaternion::from_vec4(rng.unit_vector<4>()),
                 Quaternion::from_vec4(rng.unit_vector<4>())};
      double s = rng.uniform(-10.0, 10.0);
      QuatPair q_out = q.compose(t.right_mult);
      double s_out = t.eps * s + t.shift;
      CHECK(q_out.distance(q) < 1e-12);
      CHECK(std::fabs(s_out - s) < 1e-12);
    }
  }
}

TEST_CASE("the order-96 group acts freely on random samples") {
  auto g96 = group_closure<GTildeElement>({gtilde0(), gtilde1(), gtilde2()}, 1e-9);
  Rng rng(18);
  for (int i = 0; i < 100; ++i) {
    Eigen::Matrix<double, 6, 1> a = rng.unit_vector<6>();
    Eigen::Vector2d z(rng.uniform(-1, 1), rng.uniform(-1, 1));
    QuatPair q{Quaternion::from_vec4(rng.unit_vector<4>()),
               Quaternion::from_vec4(rng.unit_vector<4>())};
    for (const auto& e : g96.elements) {
      if (e.distance(GTildeElement::identity()) < 1e-9) continue;
      auto a2 = a;
      auto z2 = z;
      auto q2 = q;
      e.apply(a2, z2, q2);
      double moved = (a2 - a).norm() + (z2 - z).norm() + q2.distance(q);
      CHECK(moved > 1e-6);
    }
  }
}
