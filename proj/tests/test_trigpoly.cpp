// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "s3fam/angles.hpp"
#include "s3fam/rng.hpp"
#include "s3fam/trigpoly.hpp"

using namespace s3fam;

namespace {

// Independent oracle: number of sign changes of f on a dense grid. Every
// odd-order zero is a sign change, so this checks the odd-order census.
int sign_changes_on_grid(const std::function<double(double)>& f, int n = 200000) {
  int changes = 0;
  double prev = f(0.0);
  for (int i = 1; i <= n; ++i) {
    double cur = f(i * kTwoPi / n);
    if (prev != 0.0 && cur != 0.0 && prev * cur < 0.0) ++changes;
    if (cur != 0.0) prev = cur;
  }
  return changes;
}

int odd_order_count(const ZeroMultiset& zs) {
  int c = 0;
  for (const auto& z : zs.zeros)
    if (z.order % 2 == 1) ++c;
  return c;
}

TrigPoly random_poly(Rng& rng, int k) {
  std::vector<double> b(k + 1), th(k + 1, 0.0);
  for (int j = 0; j <= k; ++j) b[j] = rng.uniform(-1.0, 1.0);
  for (int j = 1; j <= k; ++j) th[j] = rng.angle();
  if (std::fabs(b[k]) < 1e-3) b[k] = b[k] < 0 ? -1e-3 : 1e-3;
  return TrigPoly::make(b, th);
}

// 2k unit-circle zeros with pairwise separation at least min_gap.
std::vector<double> separated_zeros(Rng& rng, int count, double min_gap) {
  std::vector<double> zs;
  while (static_cast<int>(zs.size()) < count) {
    double a = rng.angle();
    bool ok = true;
    for (double z : zs)
      if (dist_s1(a, z) < min_gap) ok = false;
    if (ok) zs.push_back(a);
  }
  return zs;
}

}  // namespace

TEST_CASE("companion_zeros on closed forms") {
  // cos a: simple zeros at pi/2, 3pi/2
  auto zs = companion_zeros(TrigPoly::make({0, 1}, {0, 0}));
  REQUIRE(zs.zeros.size() == 2);
  CHECK(dist_s1(zs.zeros[0].alpha, kPi / 2) < 1e-10);
  CHECK(dist_s1(zs.zeros[1].alpha, 3 * kPi / 2) < 1e-10);
  CHECK(zs.total_order() == 2);

  // cos 3a: six simple zeros at pi/6 + j pi/3
  auto zs3 = companion_zeros(TrigPoly::make({0, 0, 0, 1}, {0, 0, 0, 0}));
  REQUIRE(zs3.zeros.size() == 6);
  for (int j = 0; j < 6; ++j)
    CHECK(dist_s1(zs3.zeros[j].alpha, kPi / 6 + j * kPi / 3) < 1e-9);

  // 2 + cos a: positive everywhere, no unit-circle roots
  auto zs0 = companion_zeros(TrigPoly::make({2, 1}, {0, 0}));
  CHECK(zs0.zeros.empty());
  CHECK(zs0.borderline.empty());

  // A root just off the circle lands in the borderline report.
  {
    TrigPoly tb = TrigPoly::make({1.0 + 1e-12, 1}, {0, 0});  // off-circle by ~1.4e-6
    auto zb = companion_zeros(tb);
    CHECK(zb.zeros.empty());
    CHECK(zb.borderline.size() == 2);
  }

  // (cos a)^2 = 1/2 + 1/2 cos 2a: double zeros at pi/2, 3pi/2
  auto zsq = companion_zeros(TrigPoly::make({0.5, 0, 0.5}, {0, 0, 0}));
  REQUIRE(zsq.zeros.size() == 2);
  CHECK(zsq.zeros[0].order == 2);
  CHECK(zsq.zeros[1].order == 2);

  CHECK_THROWS(companion_zeros(TrigPoly::make({0.0, 0.0}, {0, 0})));
}

TEST_CASE("zero_sum closed forms") {
  for (int k = 1; k <= 4; ++k) {
    for (double th : {0.0, 0.7, kPi / 4, 4.0}) {
      std::vector<double> b(k + 1, 0.0), phases(k + 1, 0.0);
      b[k] = 1.0;
      phases[k] = th;
      bool full = false;
      double z = zero_sum(TrigPoly::make(b, phases), &full);
      CHECK(full);
      CHECK(dist_s1(z, -2 * th) < 1e-9);
    }
  }
  // cos(2a + pi/4) -> -pi/2
  bool full = false;
  double z = zero_sum(TrigPoly::make({0, 0, 1}, {0, 0, kPi / 4}), &full);
  CHECK(full);
  CHECK(dist_s1(z, -kPi / 2) < 1e-9);
  // cos 3a -> 0
  CHECK(dist_s1(zero_sum(TrigPoly::make({0, 0, 0, 1}, {0, 0, 0, 0})), 0.0) < 1e-9);
}

TEST_CASE("zero_sum_minus closed forms") {
  auto zminus = [](const TrigPoly& t) {
    auto data = analyze_signs(companion_zeros(t), [&](double a) { return t.evaluate(a); });
    return zero_sum_minus(data);
  };
  // cos a: single negative interval (pi/2, 3pi/2), midpoint pi
  CHECK(dist_s1(zminus(TrigPoly::make({0, 1}, {0, 0})), kPi) < 1e-9);
  // cos 3a: midpoints pi/3, pi, 5pi/3 sum to 3pi = pi
  CHECK(dist_s1(zminus(TrigPoly::make({0, 0, 0, 1}, {0, 0, 0, 0})), kPi) < 1e-9);
  // -cos 2a: b_k < 0 branch, -theta_k + (k+1) pi = 3pi = pi
  CHECK(dist_s1(zminus(TrigPoly::make({0, 0, -1}, {0, 0, 0})), kPi) < 1e-9);
  // cos 2a: -theta_k + k pi = 2pi = 0
  CHECK(dist_s1(zminus(TrigPoly::make({0, 0, 1}, {0, 0, 0})), 0.0) < 1e-9);
}

TEST_CASE("ord(T) <= 2k for 1000 random polynomials of degree <= 6") {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    int k = 1 + static_cast<int>(rng.raw() % 6);
    TrigPoly t = random_poly(rng, k);
    auto zs = companion_zeros(t);
    CHECK(zs.total_order() <= 2 * t.effective_degree());
    // Odd-order zero count matches the dense sign-change oracle.
    if (i < 40) {
      CHECK(odd_order_count(zs) ==
            sign_changes_on_grid([&](double a) { return t.evaluate(a); }));
    }
  }
}

TEST_CASE("polynomials built from prescribed zeros: Z and Z^- formulas") {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    int k = 1 + static_cast<int>(rng.raw() % 3);
    bool positive = (rng.raw() % 2) == 0;
    auto zeros = separated_zeros(rng, 2 * k, 0.08);
    TrigPoly t = TrigPoly::from_zeros(zeros, positive);
    REQUIRE(t.effective_degree() == k);
    double theta_k = t.theta[k];
    REQUIRE((positive ? t.b[k] > 0 : t.b[k] < 0));

    bool full = false;
    double z = zero_sum(t, &full);
    CHECK(full);
    CHECK(dist_s1(z, -2 * theta_k) < 1e-8);

    auto data = analyze_signs(companion_zeros(t), [&](double a) { return t.evaluate(a); });
    double zm = zero_sum_minus(data);
    double expected = positive ? -theta_k + k * kPi : -theta_k + (k + 1) * kPi;
    CHECK(dist_s1(zm, expected) < 1e-8);
    // Z(f) = 2 Z^-(f)
    CHECK(dist_s1(z, 2 * zm) < 1e-8);
  }
}

TEST_CASE("Z = 2 Z^- also for generic random polynomials") {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    TrigPoly t = random_poly(rng, 1 + static_cast<int>(rng.raw() % 5));
    auto zs = companion_zeros(t);
    if (zs.total_order() == 0) continue;
    auto data = analyze_signs(zs, [&](double a) { return t.evaluate(a); });
    CHECK(dist_s1(zero_sum(zs), 2 * zero_sum_minus(data)) < 1e-8);
  }
}

TEST_CASE("zeros_of_smooth on closed forms") {
  // cos 3a with the default grid: 6 simple zeros within 1e-9
  auto data = zeros_of_smooth([](double a) { return std::cos(3 * a); });
  CHECK(!data.unresolved);
  REQUIRE(data.multiset.zeros.size() == 6);
  for (int j = 0; j < 6; ++j) {
    CHECK(data.multiset.zeros[j].order == 1);
    CHECK(dist_s1(data.multiset.zeros[j].alpha, kPi / 6 + j * kPi / 3) < 1e-9);
  }

  // (cos a)^2: one order-2 zero at pi/2 and one at 3pi/2
  auto sq = zeros_of_smooth([](double a) { return std::cos(a) * std::cos(a); });
  CHECK(!sq.unresolved);
  REQUIRE(sq.multiset.zeros.size() == 2);
  CHECK(sq.multiset.zeros[0].order == 2);
  CHECK(sq.multiset.zeros[1].order == 2);
  CHECK(dist_s1(sq.multiset.zeros[0].alpha, kPi / 2) < 1e-9);
  CHECK(dist_s1(sq.multiset.zeros[1].alpha, 3 * kPi / 2) < 1e-9);
  CHECK(dist_s1(zero_sum(sq.multiset), 2 * zero_sum_minus(sq)) < 1e-8);

  // cos^3 a: order-3 zeros
  auto cu = zeros_of_smooth([](double a) { return std::pow(std::cos(a), 3); });
  REQUIRE(cu.multiset.zeros.size() == 2);
  CHECK(cu.multiset.zeros[0].order == 3);
  CHECK(cu.multiset.zeros[1].order == 3);

  // f == 1: empty zero set, Z^- = 0 by convention
  auto one = zeros_of_smooth([](double) { return 1.0; });
  CHECK(one.multiset.zeros.empty());
  CHECK(zero_sum_minus(one) == 0.0);
  CHECK(one.sign_when_no_zeros == 1);
}

TEST_CASE("zeros_of_smooth agrees with companion_zeros on polynomial inputs") {
  Rng rng(24);
  int tested = 0;
  while (tested < 60) {
    int k = 1 + static_cast<int>(rng.raw() % 3);
    TrigPoly t = TrigPoly::from_zeros(separated_zeros(rng, 2 * k, 0.3), true);
    auto oracle = companion_zeros(t);
    // Condition on well-behaved slopes so the order call is meaningful.
    TrigPoly d = t.derivative();
    bool ok = true;
    for (const auto& z : oracle.zeros)
      if (std::fabs(d.evaluate(z.alpha)) < 1e-2 * t.norm()) ok = false;
    if (!ok) continue;
    ++tested;

    auto smooth = zeros_of_smooth([&](double a) { return t.evaluate(a); });
    CHECK(!smooth.unresolved);
    REQUIRE(smooth.multiset.zeros.size() == oracle.zeros.size());
    for (std::size_t i = 0; i < oracle.zeros.size(); ++i) {
      CHECK(smooth.multiset.zeros[i].order == oracle.zeros[i].order);
      CHECK(dist_s1(smooth.multiset.zeros[i].alpha, oracle.zeros[i].alpha) < 1e-7);
    }
  }
}

TEST_CASE("zeros_of_smooth flags unresolved pairs") {
  // Two simple zeros 1e-4 apart: below 4pi/n for the default grid.
  TrigPoly t = TrigPoly::from_zeros({1.0, 1.0 + 1e-4, 3.0, 4.5}, true);
  auto data = zeros_of_smooth([&](double a) { return t.evaluate(a); });
  CHECK(data.unresolved);
}

TEST_CASE("perturbation stability around cos 2a") {
  // ||g||_{C^4} <= 1e-3; ord stays <= 4 and Z^- stays near Z^-(cos 2a) = 0.
  for (double eps : {1e-4, 1e-9, 1e-13}) {
    auto f = [eps](double a) {
      return std::cos(2 * a) + eps * (std::cos(a + 0.3) + 0.05 * std::cos(2 * a + 1.1));
    };
    auto data = zeros_of_smooth(f);
    CHECK(!data.unresolved);
    CHECK(data.total_order() <= 4);
    if (data.total_order() == 4) {
      CHECK(dist_s1(zero_sum_minus(data), 0.0) < 1e-2);
    }
  }
}
