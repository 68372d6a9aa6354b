// Copyright 2026 The qmetro Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmetro/qfi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmetro/errors.hpp"

namespace qmetro {

namespace {

using LongComplex = std::complex<long double>;
using LongMatrix = Eigen::Matrix<LongComplex, Eigen::Dynamic, Eigen::Dynamic>;
using LongRealVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

// Square root of a unit-trace PSD matrix. Eigenvalues at or below
// cutoff * trace are zeroed and the rest renormalized to unit trace, so
// roundoff-level eigenvalues of rank-deficient states contribute nothing.
LongMatrix state_sqrt(const ComplexMatrix& m, long double cutoff) {
  LongMatrix x = m.cast<LongComplex>();
  x = ((x + x.adjoint()) * 0.5L).eval();
  Eigen::SelfAdjointEigenSolver<LongMatrix> solver(x);
  LongRealVector values = solver.eigenvalues();
  const long double trace = values.sum();
  long double kept = 0.0L;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) <= cutoff * trace) values(i) = 0.0L;
    kept += values(i);
  }
  values /= kept;
  const LongRealVector roots = values.cwiseSqrt();
  return solver.eigenvectors() * roots.cast<LongComplex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

long double long_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma,
                          const Tolerances& tol) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("fidelity: states differ in dimension");
  const auto cutoff = static_cast<long double>(tol.fidelity_eigen_cutoff);
  const LongMatrix product = state_sqrt(rho.matrix(), cutoff) * state_sqrt(sigma.matrix(), cutoff);
  Eigen::JacobiSVD<LongMatrix> svd(product);
  return std::min(svd.singularValues().sum(), 1.0L);
}

}  // namespace

SldResult sld_and_qfi(const DensityMatrix& rho, const HermitianOperator& rho_dot,
                      const Tolerances& tol) {
  if (rho.dim() != rho_dot.dim()) {
    throw DimensionMismatch("sld_and_qfi: rho and rho_dot differ in dimension");
  }
  const double dot_trace = rho_dot.matrix().trace().real();
  if (std::abs(dot_trace) > tol.rho_dot_trace) {
    throw InvalidFamily("sld_and_qfi: tr(rho_dot) = " + std::to_string(dot_trace) +
                        " is not zero");
  }
  const EigenSystem eig = hermitian_eig(HermitianOperator(rho.matrix()));
  const double cutoff = tol.sld_support_cutoff * rho.matrix().trace().real();
  const ComplexMatrix dot = eig.vectors.adjoint() * rho_dot.matrix() * eig.vectors;

  const Eigen::Index n = eig.values.size();
  ComplexMatrix sld = ComplexMatrix::Zero(n, n);
  double qfi = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double denom = eig.values(i) + eig.values(j);
      if (denom <= cutoff) continue;
      sld(i, j) = 2.0 * dot(i, j) / denom;
      qfi += 2.0 * std::norm(dot(i, j)) / denom;
    }
  }
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (eig.values(i) > cutoff) ++rank;
  }
  ComplexMatrix back = eig.vectors * sld * eig.vectors.adjoint();
  return {HermitianOperator(ComplexMatrix(0.5 * (back + back.adjoint()))), qfi, rank};
}

double qfi_pure(const PureState& psi, const ComplexVector& psi_dot) {
  if (static_cast<std::size_t>(psi_dot.size()) != psi.dim()) {
    throw DimensionMismatch("qfi_pure: psi and psi_dot differ in dimension");
  }
  const Complex overlap = psi.amplitudes().dot(psi_dot);
  return 4.0 * (psi_dot.squaredNorm() - std::norm(overlap));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma, const Tolerances& tol) {
  return static_cast<double>(long_fidelity(rho, sigma, tol));
}

double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma,
                      const Tolerances& tol) {
  const long double f = long_fidelity(rho, sigma, tol);
  return static_cast<double>(std::sqrt(std::max(0.0L, 2.0L - 2.0L * f)));
}

double qfi_via_bures_limit(const DensityFamily& family, double theta, double dtheta,
                           const Tolerances& tol) {
  if (!(dtheta > 0.0)) throw InvalidInput("qfi_via_bures_limit: dtheta must be positive");
  const long double f = long_fidelity(family(theta), family(theta + dtheta), tol);
  const long double d2 = std::max(0.0L, 2.0L - 2.0L * f);
  const auto h = static_cast<long double>(dtheta);
  return static_cast<double>(4.0L * d2 / (h * h));
}

}  // namespace qmetro
