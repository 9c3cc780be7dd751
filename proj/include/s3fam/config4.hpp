// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "s3fam/angles.hpp"
#include "s3fam/chart.hpp"
#include "s3fam/family.hpp"
#include "s3fam/trigpoly.hpp"

namespace s3fam {

/// A labeled configuration (Z; mu+, mu-): 4 distinct zeros on S^1 and the
/// midpoints of the 4 complementary arcs, split into two labels that each
/// occupy a pair of non-adjacent arcs. sum(mu+) = pi + sum(mu-) mod 2pi.
struct Config4 {
  std::array<double, 4> zeros{};      // sorted ascending in [0, 2pi)
  std::array<double, 2> mu_plus{};
  std::array<double, 2> mu_minus{};

  /// Validates all invariants; throws std::invalid_argument on failure.
  static Config4 make(std::array<double, 4> zeros, std::array<double, 2> mu_plus,
                      std::array<double, 2> mu_minus, double tol = 1e-9);
};

/// (Z; mu({f>0}), mu({f<0})) from a zero analysis with exactly 4 simple
/// zeros; rejects anything else.
Config4 config_from_function(const SignedZeroData& data);

/// sum(mu-) mod 2pi.
double p_sum(const Config4& c);

/// Theta(a, e^{i theta}) = -theta; requires a boundary parameter.
double theta_map(const FamilyParameter& param);

/// The labeled-configuration action: rotate/reflect all angles by
/// rho(g1): a -> a + pi/3 or rho(g2): a -> pi - a, and swap the labels.
Config4 hat_rho_action(ChartGen g, const Config4& c);

}  // namespace s3fam
