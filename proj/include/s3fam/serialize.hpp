// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "s3fam/family.hpp"
#include "s3fam/trigpoly.hpp"

namespace s3fam {

/// {k, b: [...], theta: [...]}
inline nlohmann::ordered_json to_json(const TrigPoly& t) {
  nlohmann::ordered_json j;
  j["k"] = t.degree;
  j["b"] = t.b;
  std::vector<double> phases(t.theta.begin() + 1, t.theta.end());
  j["theta"] = phases;
  return j;
}

inline TrigPoly trigpoly_from_json(const nlohmann::ordered_json& j) {
  std::vector<double> b = j.at("b").get<std::vector<double>>();
  std::vector<double> phases = j.at("theta").get<std::vector<double>>();
  return TrigPoly::make(b, phases);
}

/// {zeros: [{alpha, order}], neg_midpoints: [...]}
inline nlohmann::ordered_json to_json(const SignedZeroData& d) {
  nlohmann::ordered_json j;
  j["zeros"] = nlohmann::ordered_json::array();
  for (const auto& z : d.multiset.zeros)
    j["zeros"].push_back({{"alpha", z.alpha}, {"order", z.order}});
  j["neg_midpoints"] = d.negative_midpoints;
  return j;
}

/// {a: [6 reals], r, theta}
inline nlohmann::ordered_json to_json(const FamilyParameter& p) {
  nlohmann::ordered_json j;
  j["a"] = {p.a[0], p.a[1], p.a[2], p.a[3], p.a[4], p.a[5]};
  j["r"] = p.z.r;
  j["theta"] = p.z.theta;
  return j;
}

inline FamilyParameter family_parameter_from_json(const nlohmann::ordered_json& j) {
  std::vector<double> a = j.at("a").get<std::vector<double>>();
  if (a.size() != 6) throw std::invalid_argument("parameter: need 6 coordinates");
  Vector6d v;
  for (int i = 0; i < 6; ++i) v[i] = a[i];
  return {ProjParam::from(v), DiscParam::polar(j.at("r").get<double>(),
                                               j.at("theta").get<double>())};
}

}  // namespace s3fam
