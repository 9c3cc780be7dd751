// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

#include "s3fam/angles.hpp"

namespace s3fam {

// Deterministic RNG: a fixed engine plus hand-rolled transforms, so that
// a given (seed, stream) pair yields the same sequence on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Derives an independent stream from a master seed (splitmix64 mix).
  static Rng stream(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return Rng(z ^ (z >> 31));
  }

  double uniform01() {
    // 53-bit mantissa from the top bits of the engine output.
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  double angle() { return uniform(0.0, kTwoPi); }

  double normal() {
    // Box-Muller; branch-free and engine-order deterministic.
    double u1 = uniform01(), u2 = uniform01();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  template <int N>
  Eigen::Matrix<double, N, 1> unit_vector() {
    Eigen::Matrix<double, N, 1> v;
    double n2 = 0.0;
    do {
      for (int i = 0; i < N; ++i) v[i] = normal();
      n2 = v.squaredNorm();
    } while (n2 < 1e-12);
    return v / std::sqrt(n2);
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace s3fam
