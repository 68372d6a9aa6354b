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

#ifndef QMETRO_MATRIX_CORE_HPP
#define QMETRO_MATRIX_CORE_HPP

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "qmetro/tolerances.hpp"

namespace qmetro {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Throws InvalidInput on an empty matrix or non-finite entries.
void require_valid(const ComplexMatrix& m, const char* what);

/// A d x d complex Hermitian matrix. The stored matrix is always the exact
/// symmetrization (M + M^dag)/2 of the input.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(const ComplexMatrix& m, const Tolerances& tol = {});

  static HermitianOperator zero(std::size_t dim);
  static HermitianOperator identity(std::size_t dim);
  static HermitianOperator diagonal(const RealVector& values);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

  HermitianOperator operator+(const HermitianOperator& other) const;
  HermitianOperator operator-(const HermitianOperator& other) const;
  HermitianOperator operator*(double s) const;
  friend HermitianOperator operator*(double s, const HermitianOperator& h) { return h * s; }

  // Adds s * I.
  HermitianOperator shifted(double s) const;

 private:
  struct Trusted {};
  HermitianOperator(ComplexMatrix m, Trusted) : matrix_(std::move(m)) {}

  ComplexMatrix matrix_;
};

struct EigenSystem {
  RealVector values;     // ascending
  ComplexMatrix vectors; // orthonormal eigenvectors as columns
};

EigenSystem hermitian_eig(const HermitianOperator& h);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& a);
/// Largest absolute eigenvalue.
double spectral_norm(const HermitianOperator& h);

/// exp(-i s H) through the eigendecomposition of H.
ComplexMatrix unitary_exp(const HermitianOperator& h, double s = 1.0);
ComplexMatrix unitary_exp(const EigenSystem& eig, double s = 1.0);

/// Directional derivative of exp(-iH) along Hdot (Daleckii-Krein form).
ComplexMatrix exp_derivative(const HermitianOperator& h, const HermitianOperator& hdot,
                             const Tolerances& tol = {});
ComplexMatrix exp_derivative(const EigenSystem& eig, const HermitianOperator& hdot,
                             const Tolerances& tol = {});

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b);

enum class Subsystem { A, B };

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);

/// (exp(-iA/N) exp(-iB/N))^N.
ComplexMatrix trotter_product(const HermitianOperator& a, const HermitianOperator& b,
                              std::size_t steps);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

namespace pauli {
HermitianOperator x();
HermitianOperator y();
HermitianOperator z();
}  // namespace pauli

}  // namespace qmetro

#endif  // QMETRO_MATRIX_CORE_HPP
