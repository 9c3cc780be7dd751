// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace s3fam {

/// All complex roots of c[0] + c[1] z + ... + c[n] z^n (c[n] != 0), found as
/// eigenvalues of the companion matrix with one Newton polish per root.
std::vector<std::complex<double>> polynomial_roots(
    const std::vector<std::complex<double>>& coeffs);

/// Real-coefficient convenience overload.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs);

/// Real roots only; a root z is accepted when |Im z| < imag_tolerance.
std::vector<double> real_polynomial_roots(const std::vector<double>& coeffs,
                                          double imag_tolerance = 1e-8);

}  // namespace s3fam
