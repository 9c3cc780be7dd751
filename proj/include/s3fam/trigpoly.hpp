// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "s3fam/angles.hpp"

namespace s3fam {

/// Trigonometric polynomial b0 + sum_j b_j cos(j*alpha + theta_j), j = 1..k.
/// ||T|| = (sum b_j^2)^{1/2}.
struct TrigPoly {
  int degree = 0;               // k >= 0
  std::vector<double> b;        // b[0..k]
  std::vector<double> theta;    // theta[1..k]; theta[0] unused, kept for indexing

  static TrigPoly constant(double b0);
  /// Builds from amplitudes b[0..k] and phases theta[1..k] (theta[0] ignored,
  /// may be omitted by passing a vector of length k).
  static TrigPoly make(std::vector<double> amplitudes, std::vector<double> phases);

  /// The unique degree-k polynomial with the 2k prescribed unit-circle zeros
  /// and leading term b_k cos(k a + theta_k), b_k = +-1. The zeros must
  /// satisfy sum(zeros) = -2 theta_k mod 2pi; theta_k is derived from them.
  static TrigPoly from_zeros(const std::vector<double>& zeros, bool positive_leading = true);

  double evaluate(double alpha) const;
  TrigPoly derivative() const;
  double norm() const;

  /// Effective degree: largest j with b_j != 0 (-1 for the zero polynomial).
  int effective_degree() const;

  /// q_T(z) = z^k (b0 + 1/2 sum_j b_j (e^{i theta_j} z^j + e^{-i theta_j} z^-j)),
  /// the degree-2k algebraic polynomial whose unit-circle roots are the zeros
  /// of T. Coefficients ordered by increasing power.
  std::vector<std::complex<double>> companion_polynomial() const;
};

/// Zeros of a circle function with their orders; total_order = sum of orders.
struct ZeroMultiset {
  struct Zero {
    double alpha = 0.0;
    int order = 1;
  };
  std::vector<Zero> zeros;  // sorted by alpha in [0, 2pi)
  /// Roots that just miss the unit-circle tolerance (within 100x of it);
  /// reported so borderline cases are visible rather than silently dropped.
  std::vector<std::complex<double>> borderline;
  int total_order() const;
};

/// Zero multiset plus the sign data entering Z^-: midpoints of the connected
/// components of {f < 0} and, per zero, n_f(alpha) in {0,1,2} = number of
/// negative components whose closure contains the zero.
struct SignedZeroData {
  ZeroMultiset multiset;
  std::vector<double> negative_midpoints;
  std::vector<double> positive_midpoints;
  std::vector<int> n_counts;          // parallel to multiset.zeros
  int sign_when_no_zeros = 0;         // +1 / -1 when the zero set is empty
  bool unresolved = false;            // grid too coarse or order undecidable
  std::string diagnostic;

  int total_order() const { return multiset.total_order(); }
};

/// Unit-circle zeros of T via the roots of q_T. Roots with ||z|-1| <
/// root_tolerance are kept and clustered (angular distance < cluster_tolerance
/// merges, adding multiplicities). Rejects the zero polynomial.
ZeroMultiset companion_zeros(const TrigPoly& T, double root_tolerance = 1e-7,
                             double cluster_tolerance = 1e-6);

/// Z(f): sum of zeros with multiplicity, mod 2pi. `full_order`, when supplied,
/// is set to whether total order == 2 * effective degree (the regime where
/// Z(T) = -2 theta_k).
double zero_sum(const ZeroMultiset& zeros);
double zero_sum(const TrigPoly& T, bool* full_order = nullptr);

/// Z^-(f) = sum of negative-component midpoints
///        + sum over zeros of (ord - n)/2 * alpha, mod 2pi.
/// Convention: 0 when there are no zeros.
double zero_sum_minus(const SignedZeroData& data);

/// Completes a ZeroMultiset into SignedZeroData by sampling the sign of f on
/// the arcs between consecutive zeros.
SignedZeroData analyze_signs(const ZeroMultiset& zeros,
                             const std::function<double(double)>& f);

struct SmoothZeroOptions {
  int n_samples = 4096;
  double refine_tolerance = 1e-12;
  int max_order = 3;
};

/// Zero analysis of a smooth function on S^1 by sampling: sign changes are
/// bisected; even-order zeros are found as near-zero local minima of |f| with
/// a finite-difference derivative check; orders come from central finite
/// differences up to max_order. Sets `unresolved` when two candidates are
/// closer than 4pi/n_samples or an order cannot be decided.
SignedZeroData zeros_of_smooth(const std::function<double(double)>& f,
                               const SmoothZeroOptions& options = {});

}  // namespace s3fam
