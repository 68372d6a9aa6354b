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

// Independent oracles shared by the unit and acceptance suites. Nothing here
// calls the library routine it is used to check.

#ifndef QMETRO_TESTS_TEST_SUPPORT_HPP
#define QMETRO_TESTS_TEST_SUPPORT_HPP

#include <cmath>
#include <complex>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "qmetro/matrix_core.hpp"
#include "qmetro/quantum_channels.hpp"
#include "qmetro/rng.hpp"

namespace qmetro::testing {

inline double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// sqrt(lambda_max(A^dag A)) straight from Eigen's solver.
inline double norm_via_gram(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> s(a.adjoint() * a, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, s.eigenvalues().maxCoeff()));
}

// exp(-i H) by scaling and squaring (Eigen's matrix exponential), independent
// of the eigendecomposition route.
inline ComplexMatrix expm_minus_i(const ComplexMatrix& h) {
  const ComplexMatrix arg = Complex(0.0, -1.0) * h;
  return arg.exp();
}

inline ComplexMatrix central_difference_expm(const ComplexMatrix& h, const ComplexMatrix& hdot,
                                             double eps) {
  return (expm_minus_i(h + eps * hdot) - expm_minus_i(h - eps * hdot)) / (2.0 * eps);
}

// dU/dtheta of a unitary family by central differences on theta.
inline ComplexMatrix central_difference_family(const UnitaryFamily& fam, double theta,
                                               double eps) {
  return (expm_minus_i(fam.hamiltonian_at(theta + eps).matrix()) -
          expm_minus_i(fam.hamiltonian_at(theta - eps).matrix())) /
         (2.0 * eps);
}

inline ComplexMatrix random_complex(std::size_t rows, std::size_t cols, RngStream& rng) {
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, j) = rng.complex_normal();
  return m;
}

// Spread of a Hermitian matrix computed with Eigen directly.
inline double spread_squared(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> s(h, Eigen::EigenvaluesOnly);
  const double spread = s.eigenvalues().maxCoeff() - s.eigenvalues().minCoeff();
  return spread * spread;
}

}  // namespace qmetro::testing

#endif  // QMETRO_TESTS_TEST_SUPPORT_HPP
