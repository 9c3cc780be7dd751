// SPDX-License-Identifier: Apache-2.0
#include "s3fam/polyroot.hpp"

#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace s3fam {

namespace {

using Cplx = std::complex<double>;

Cplx evaluate(const std::vector<Cplx>& c, Cplx z) {
  Cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Cplx evaluate_derivative(const std::vector<Cplx>& c, Cplx z) {
  Cplx acc = 0.0;
  for (std::size_t k = c.size(); k-- > 1;)
    acc = acc * z + static_cast<double>(k) * c[k];
  return acc;
}

}  // namespace

std::vector<Cplx> polynomial_roots(const std::vector<Cplx>& coeffs) {
  std::vector<Cplx> c = coeffs;
  while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() <= 1) throw std::invalid_argument("polynomial_roots: degree < 1");

  const std::size_t n = c.size() - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) companion(i + 1, i) = 1.0;
  for (std::size_t i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("polynomial_roots: eigenvalue iteration failed");

  std::vector<Cplx> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    Cplx z = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    Cplx dp = evaluate_derivative(c, z);
    if (std::abs(dp) > 1e-12) {
      Cplx step = evaluate(c, z) / dp;
      if (std::abs(step) < 0.1) z -= step;  // polish simple roots, leave clusters alone
    }
    roots[i] = z;
  }
  return roots;
}

std::vector<Cplx> polynomial_roots(const std::vector<double>& coeffs) {
  std::vector<Cplx> c(coeffs.begin(), coeffs.end());
  return polynomial_roots(c);
}

std::vector<double> real_polynomial_roots(const std::vector<double>& coeffs,
                                          double imag_tolerance) {
  std::vector<double> out;
  for (const Cplx& z : polynomial_roots(coeffs))
    if (std::fabs(z.imag()) < imag_tolerance) out.push_back(z.real());
  return out;
}

}  // namespace s3fam
