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

#include "qmetro/matrix_core.hpp"

#include <cmath>
#include <string>

#include "qmetro/errors.hpp"

namespace qmetro {

namespace {

constexpr Complex kI{0.0, 1.0};

// -i e^{-i(a+b)/2} sinc((a-b)/2), i.e. the divided difference of exp(-i x)
// written without the cancellation of (e^{-ia} - e^{-ib}) / (a - b).
Complex exp_divided_difference(double a, double b, double degeneracy) {
  const double half_gap = 0.5 * (a - b);
  const Complex phase = std::exp(-kI * (0.5 * (a + b)));
  if (std::abs(a - b) <= degeneracy) return -kI * phase;
  return -kI * phase * (std::sin(half_gap) / half_gap);
}

}  // namespace

void require_valid(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw InvalidInput(std::string(what) + ": empty matrix");
  }
  if (!m.allFinite()) {
    throw InvalidInput(std::string(what) + ": non-finite entries");
  }
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m, const Tolerances& tol) {
  require_valid(m, "HermitianOperator");
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("HermitianOperator: matrix is not square");
  }
  const ComplexMatrix anti = m - m.adjoint();
  const double asym = spectral_norm(anti);
  if (asym > tol.hermitian_asymmetry * (1.0 + spectral_norm(m))) {
    throw InvalidInput("HermitianOperator: matrix is not Hermitian (asymmetry " +
                       std::to_string(asym) + ")");
  }
  matrix_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  if (dim == 0) throw InvalidInput("HermitianOperator::zero: dimension 0");
  const auto n = static_cast<Eigen::Index>(dim);
  return HermitianOperator(ComplexMatrix::Zero(n, n), Trusted{});
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  if (dim == 0) throw InvalidInput("HermitianOperator::identity: dimension 0");
  const auto n = static_cast<Eigen::Index>(dim);
  return HermitianOperator(ComplexMatrix::Identity(n, n), Trusted{});
}

HermitianOperator HermitianOperator::diagonal(const RealVector& values) {
  if (values.size() == 0) throw InvalidInput("HermitianOperator::diagonal: dimension 0");
  if (!values.allFinite()) throw InvalidInput("HermitianOperator::diagonal: non-finite entries");
  return HermitianOperator(ComplexMatrix(values.cast<Complex>().asDiagonal()), Trusted{});
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
  if (dim() != other.dim()) throw DimensionMismatch("HermitianOperator::operator+");
  return HermitianOperator(matrix_ + other.matrix_, Trusted{});
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& other) const {
  if (dim() != other.dim()) throw DimensionMismatch("HermitianOperator::operator-");
  return HermitianOperator(matrix_ - other.matrix_, Trusted{});
}

HermitianOperator HermitianOperator::operator*(double s) const {
  if (!std::isfinite(s)) throw InvalidInput("HermitianOperator: non-finite scale");
  return HermitianOperator(matrix_ * s, Trusted{});
}

HermitianOperator HermitianOperator::shifted(double s) const {
  if (!std::isfinite(s)) throw InvalidInput("HermitianOperator: non-finite shift");
  ComplexMatrix m = matrix_;
  m.diagonal().array() += s;
  return HermitianOperator(std::move(m), Trusted{});
}

EigenSystem hermitian_eig(const HermitianOperator& h) {
  if (h.dim() == 0) throw InvalidInput("hermitian_eig: dimension 0");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw InvalidInput("hermitian_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double spectral_norm(const ComplexMatrix& a) {
  require_valid(a, "spectral_norm");
  Eigen::BDCSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

double spectral_norm(const HermitianOperator& h) {
  const EigenSystem eig = hermitian_eig(h);
  return std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
}

ComplexMatrix unitary_exp(const EigenSystem& eig, double s) {
  const ComplexVector phases = (-kI * s * eig.values.cast<Complex>()).array().exp();
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix unitary_exp(const HermitianOperator& h, double s) {
  return unitary_exp(hermitian_eig(h), s);
}

ComplexMatrix exp_derivative(const EigenSystem& eig, const HermitianOperator& hdot,
                             const Tolerances& tol) {
  const Eigen::Index n = eig.values.size();
  if (static_cast<Eigen::Index>(hdot.dim()) != n) {
    throw DimensionMismatch("exp_derivative: H and Hdot differ in dimension");
  }
  ComplexMatrix inner = eig.vectors.adjoint() * hdot.matrix() * eig.vectors;
  for (Eigen::Index b = 0; b < n; ++b) {
    for (Eigen::Index a = 0; a < n; ++a) {
      inner(a, b) *= exp_divided_difference(eig.values(a), eig.values(b), tol.eigen_degeneracy);
    }
  }
  return eig.vectors * inner * eig.vectors.adjoint();
}

ComplexMatrix exp_derivative(const HermitianOperator& h, const HermitianOperator& hdot,
                             const Tolerances& tol) {
  if (h.dim() != hdot.dim()) {
    throw DimensionMismatch("exp_derivative: H and Hdot differ in dimension");
  }
  return exp_derivative(hermitian_eig(h), hdot, tol);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_valid(a, "kron");
  require_valid(b, "kron");
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(kron(a.matrix(), b.matrix()));
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
  require_valid(rho, "partial_trace");
  const auto da = static_cast<Eigen::Index>(dim_a);
  const auto db = static_cast<Eigen::Index>(dim_b);
  if (da == 0 || db == 0 || rho.rows() != da * db || rho.cols() != da * db) {
    throw DimensionMismatch("partial_trace: rho is not (dimA*dimB) square");
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index k = 0; k < da; ++k)
        for (Eigen::Index j = 0; j < db; ++j) out(i, k) += rho(i * db + j, k * db + j);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (Eigen::Index j = 0; j < db; ++j)
    for (Eigen::Index l = 0; l < db; ++l)
      for (Eigen::Index i = 0; i < da; ++i) out(j, l) += rho(i * db + j, i * db + l);
  return out;
}

ComplexMatrix trotter_product(const HermitianOperator& a, const HermitianOperator& b,
                              std::size_t steps) {
  if (steps == 0) throw InvalidInput("trotter_product: N must be >= 1");
  if (a.dim() != b.dim()) throw DimensionMismatch("trotter_product: A and B differ in dimension");
  const double s = 1.0 / static_cast<double>(steps);
  ComplexMatrix step = unitary_exp(a, s) * unitary_exp(b, s);
  const auto n = static_cast<Eigen::Index>(a.dim());
  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  // Binary powering: log2(N) products instead of N.
  for (std::size_t k = steps; k > 0; k >>= 1) {
    if (k & 1U) result = result * step;
    if (k > 1) step = step * step;
  }
  return result;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || b.cols() != a.rows()) {
    throw DimensionMismatch("commutator: shapes do not compose");
  }
  return a * b - b * a;
}

namespace pauli {

HermitianOperator x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return HermitianOperator(m);
}

HermitianOperator y() {
  ComplexMatrix m(2, 2);
  m << 0, -kI, kI, 0;
  return HermitianOperator(m);
}

HermitianOperator z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return HermitianOperator(m);
}

}  // namespace pauli

}  // namespace qmetro
