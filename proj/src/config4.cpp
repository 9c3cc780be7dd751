// SPDX-License-Identifier: Apache-2.0
#include "s3fam/config4.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace s3fam {

namespace {

// Index of the arc (between consecutive zeros, cyclically) containing angle m.
int arc_index(const std::array<double, 4>& zeros, double m) {
  for (int i = 0; i < 4; ++i) {
    double a = zeros[i], b = zeros[(i + 1) % 4];
    double len = b - a;
    if (len <= 0) len += kTwoPi;
    double off = wrap_angle(m - a);
    if (off > 0 && off < len) return i;
  }
  return -1;
}

}  // namespace

Config4 Config4::make(std::array<double, 4> zeros, std::array<double, 2> mu_plus,
                      std::array<double, 2> mu_minus, double tol) {
  Config4 c;
  for (auto& z : zeros) z = wrap_angle(z);
  std::sort(zeros.begin(), zeros.end());
  for (int i = 0; i < 4; ++i)
    if (dist_s1(zeros[i], zeros[(i + 1) % 4]) < tol)
      throw std::invalid_argument("Config4: zeros not distinct");
  c.zeros = zeros;
  for (auto& m : mu_plus) m = wrap_angle(m);
  for (auto& m : mu_minus) m = wrap_angle(m);
  c.mu_plus = mu_plus;
  c.mu_minus = mu_minus;

  // mu+ and mu- are disjoint and together hit all 4 arc midpoints.
  std::array<double, 4> mids;
  for (int i = 0; i < 4; ++i) {
    double a = zeros[i], b = zeros[(i + 1) % 4];
    double len = b - a;
    if (len <= 0) len += kTwoPi;
    mids[i] = wrap_angle(a + 0.5 * len);
  }
  std::array<int, 2> plus_arcs{}, minus_arcs{};
  for (int j = 0; j < 2; ++j) {
    plus_arcs[j] = arc_index(zeros, mu_plus[j]);
    minus_arcs[j] = arc_index(zeros, mu_minus[j]);
    if (plus_arcs[j] < 0 || dist_s1(mu_plus[j], mids[plus_arcs[j]]) > tol)
      throw std::invalid_argument("Config4: mu+ entry is not an arc midpoint");
    if (minus_arcs[j] < 0 || dist_s1(mu_minus[j], mids[minus_arcs[j]]) > tol)
      throw std::invalid_argument("Config4: mu- entry is not an arc midpoint");
  }
  std::array<bool, 4> seen{};
  for (int a : plus_arcs) seen[a] = true;
  for (int a : minus_arcs) {
    if (seen[a]) throw std::invalid_argument("Config4: labels overlap");
    seen[a] = true;
  }
  if (!(seen[0] && seen[1] && seen[2] && seen[3]))
    throw std::invalid_argument("Config4: labels miss an arc");
  // Non-adjacency: the two arcs of one label must be opposite (0,2) or (1,3).
  if ((plus_arcs[0] + 2) % 4 != plus_arcs[1] && (plus_arcs[1] + 2) % 4 != plus_arcs[0])
    throw std::invalid_argument("Config4: mu+ occupies adjacent arcs");

  double sp = wrap_angle(mu_plus[0] + mu_plus[1]);
  double sm = wrap_angle(mu_minus[0] + mu_minus[1] + kPi);
  if (dist_s1(sp, sm) > tol)
    throw std::invalid_argument("Config4: sum(mu+) != pi + sum(mu-)");
  return c;
}

Config4 config_from_function(const SignedZeroData& data) {
  const auto& zs = data.multiset.zeros;
  if (zs.size() != 4) throw std::invalid_argument("config_from_function: need exactly 4 zeros");
  for (const auto& z : zs)
    if (z.order != 1) throw std::invalid_argument("config_from_function: zero of order > 1");
  if (data.positive_midpoints.size() != 2 || data.negative_midpoints.size() != 2)
    throw std::invalid_argument("config_from_function: sign pattern is not 2+2");
  return Config4::make({zs[0].alpha, zs[1].alpha, zs[2].alpha, zs[3].alpha},
                       {data.positive_midpoints[0], data.positive_midpoints[1]},
                       {data.negative_midpoints[0], data.negative_midpoints[1]});
}

double p_sum(const Config4& c) { return wrap_angle(c.mu_minus[0] + c.mu_minus[1]); }

double theta_map(const FamilyParameter& param) {
  if (!param.z.on_boundary(1e-9))
    throw std::invalid_argument("theta_map: parameter is not on the boundary circle");
  return wrap_angle(-param.z.theta);
}

Config4 hat_rho_action(ChartGen g, const Config4& c) {
  auto act = [&](double a) {
    return g == ChartGen::g1 ? wrap_angle(a + kPi / 3.0) : wrap_angle(kPi - a);
  };
  std::array<double, 4> zeros;
  for (int i = 0; i < 4; ++i) zeros[i] = act(c.zeros[i]);
  // Labels swap.
  std::array<double, 2> mu_plus = {act(c.mu_minus[0]), act(c.mu_minus[1])};
  std::array<double, 2> mu_minus = {act(c.mu_plus[0]), act(c.mu_plus[1])};
  return Config4::make(zeros, mu_plus, mu_minus);
}

}  // namespace s3fam
