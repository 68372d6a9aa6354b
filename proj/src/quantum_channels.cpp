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

#include "qmetro/quantum_channels.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qmetro/errors.hpp"

namespace qmetro {

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

PureState::PureState(ComplexVector amplitudes, const Tolerances& tol)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw InvalidInput("PureState: dimension 0");
  if (!amplitudes_.allFinite()) throw InvalidInput("PureState: non-finite amplitudes");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol.pure_state_norm) {
    throw InvalidInput("PureState: amplitudes not normalized (norm " + std::to_string(norm) + ")");
  }
}

PureState PureState::normalized(const ComplexVector& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvalidInput("PureState::normalized: zero or non-finite vector");
  }
  return PureState(v / norm);
}

PureState PureState::basis(std::size_t dim, std::size_t k) {
  if (k >= dim) throw InvalidInput("PureState::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(k)) = 1.0;
  return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m, const Tolerances& tol) {
  require_valid(m, "DensityMatrix");
  if (m.rows() != m.cols()) throw DimensionMismatch("DensityMatrix: matrix is not square");
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol.density_hermitian) throw InvalidInput("DensityMatrix: not Hermitian");
  const Complex trace = m.trace();
  if (std::abs(trace - 1.0) > tol.density_trace) {
    throw InvalidInput("DensityMatrix: trace " + std::to_string(trace.real()) + " != 1");
  }
  matrix_ = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues()(0) < tol.density_min_eigenvalue) {
    throw InvalidInput("DensityMatrix: negative eigenvalue " +
                       std::to_string(solver.eigenvalues()(0)));
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw InvalidInput("DensityMatrix::maximally_mixed: dimension 0");
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(dim));
}

// ---------------------------------------------------------------------------
// Kraus channels
// ---------------------------------------------------------------------------

double completeness_residual(const std::vector<ComplexMatrix>& operators) {
  if (operators.empty()) throw InvalidInput("completeness_residual: no operators");
  const Eigen::Index n = operators.front().cols();
  ComplexMatrix sum = -ComplexMatrix::Identity(n, n);
  for (const auto& a : operators) sum += a.adjoint() * a;
  return spectral_norm(sum);
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators, const Tolerances& tol)
    : operators_(std::move(operators)) {
  if (operators_.empty()) throw InvalidInput("KrausChannel: no Kraus operators");
  const auto& first = operators_.front();
  require_valid(first, "KrausChannel");
  for (const auto& a : operators_) {
    require_valid(a, "KrausChannel");
    if (a.rows() != first.rows() || a.cols() != first.cols()) {
      throw DimensionMismatch("KrausChannel: Kraus operators differ in shape");
    }
  }
  dim_in_ = static_cast<std::size_t>(first.cols());
  dim_out_ = static_cast<std::size_t>(first.rows());
  const double residual = completeness_residual(operators_);
  if (residual > tol.kraus_completeness) {
    throw InvalidInput("KrausChannel: completeness violated (residual " +
                       std::to_string(residual) + ")");
  }
}

KrausChannel KrausChannel::identity(std::size_t dim) {
  if (dim == 0) throw InvalidInput("KrausChannel::identity: dimension 0");
  const auto n = static_cast<Eigen::Index>(dim);
  return KrausChannel({ComplexMatrix::Identity(n, n)});
}

KrausChannel KrausChannel::unitary(const ComplexMatrix& u, const Tolerances& tol) {
  return KrausChannel({u}, tol);
}

KrausChannel KrausChannel::fully_depolarizing(std::size_t dim) {
  if (dim == 0) throw InvalidInput("KrausChannel::fully_depolarizing: dimension 0");
  const auto n = static_cast<Eigen::Index>(dim);
  const double w = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<ComplexMatrix> ops;
  ops.reserve(dim * dim);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      ComplexMatrix p = ComplexMatrix::Zero(n, n);
      p(j, k) = w;
      ops.push_back(std::move(p));
    }
  }
  return KrausChannel(std::move(ops));
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix& x) const {
  const auto din = static_cast<Eigen::Index>(dim_in_);
  if (x.rows() != din || x.cols() != din) {
    throw DimensionMismatch("KrausChannel::apply: operator does not match input dimension");
  }
  const auto dout = static_cast<Eigen::Index>(dim_out_);
  ComplexMatrix out = ComplexMatrix::Zero(dout, dout);
  for (const auto& a : operators_) out += a * x * a.adjoint();
  return out;
}

DensityMatrix apply_kraus(const KrausChannel& channel, const DensityMatrix& rho,
                          const Tolerances& tol) {
  if (rho.dim() != channel.dim_in()) {
    throw DimensionMismatch("apply_kraus: state dimension does not match channel input");
  }
  return DensityMatrix(channel.apply(rho.matrix()), tol);
}

// ---------------------------------------------------------------------------
// Unitary families
// ---------------------------------------------------------------------------

UnitaryFamily UnitaryFamily::phase_shift(const HermitianOperator& generator) {
  UnitaryFamily fam;
  fam.dim_ = generator.dim();
  fam.kind_ = FamilyKind::PhaseShift;
  fam.generator_ = generator;
  fam.lifted_generator_ = generator;
  return fam;
}

UnitaryFamily UnitaryFamily::extended(const HermitianOperator& generator,
                                      std::size_t ancilla_dim,
                                      const HermitianOperator& interaction) {
  if (ancilla_dim == 0) throw InvalidInput("UnitaryFamily::extended: ancilla dimension 0");
  if (interaction.dim() != generator.dim() * ancilla_dim) {
    throw DimensionMismatch("UnitaryFamily::extended: H_int must act on probe (x) ancilla");
  }
  UnitaryFamily fam;
  fam.dim_ = interaction.dim();
  fam.kind_ = FamilyKind::Extended;
  fam.generator_ = generator;
  fam.interaction_ = interaction;
  fam.ancilla_dim_ = ancilla_dim;
  fam.lifted_generator_ = kron(generator, HermitianOperator::identity(ancilla_dim));
  return fam;
}

UnitaryFamily UnitaryFamily::general(std::size_t dim, HamiltonianFn hamiltonian,
                                     HamiltonianFn hamiltonian_derivative) {
  if (dim == 0) throw InvalidInput("UnitaryFamily::general: dimension 0");
  if (!hamiltonian || !hamiltonian_derivative) {
    throw InvalidInput("UnitaryFamily::general: missing H(theta) or dH/dtheta");
  }
  UnitaryFamily fam;
  fam.dim_ = dim;
  fam.kind_ = FamilyKind::General;
  fam.hamiltonian_ = std::move(hamiltonian);
  fam.derivative_ = std::move(hamiltonian_derivative);
  return fam;
}

HermitianOperator UnitaryFamily::hamiltonian_at(double theta) const {
  if (!std::isfinite(theta)) throw InvalidInput("UnitaryFamily: non-finite theta");
  switch (kind_) {
    case FamilyKind::PhaseShift:
      return theta * *generator_;
    case FamilyKind::Extended:
      return theta * *lifted_generator_ + *interaction_;
    case FamilyKind::General:
      break;
  }
  HermitianOperator h = hamiltonian_(theta);
  if (h.dim() != dim_) throw DimensionMismatch("UnitaryFamily: H(theta) has wrong dimension");
  return h;
}

HermitianOperator UnitaryFamily::hamiltonian_derivative_at(double theta) const {
  if (!std::isfinite(theta)) throw InvalidInput("UnitaryFamily: non-finite theta");
  if (kind_ != FamilyKind::General) return *lifted_generator_;
  HermitianOperator hdot = derivative_(theta);
  if (hdot.dim() != dim_) throw DimensionMismatch("UnitaryFamily: dH/dtheta has wrong dimension");
  return hdot;
}

UnitaryPoint evaluate_unitary(const UnitaryFamily& family, double theta, const Tolerances& tol) {
  const EigenSystem eig = hermitian_eig(family.hamiltonian_at(theta));
  return {unitary_exp(eig, 1.0), exp_derivative(eig, family.hamiltonian_derivative_at(theta), tol)};
}

// ---------------------------------------------------------------------------
// Random ensembles
// ---------------------------------------------------------------------------

namespace {

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, RngStream& rng) {
  ComplexMatrix x(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  // Column-major fill order is part of the reproducibility contract.
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i) x(i, j) = rng.complex_normal();
  return x;
}

}  // namespace

HermitianOperator random_hermitian(std::size_t dim, double scale, RngStream& rng) {
  if (dim == 0) throw InvalidInput("random_hermitian: dimension 0");
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw InvalidInput("random_hermitian: scale must be finite and non-negative");
  }
  const ComplexMatrix x = ginibre(dim, dim, rng);
  return HermitianOperator(ComplexMatrix(0.5 * scale * (x + x.adjoint())));
}

PureState random_pure_state(std::size_t dim, RngStream& rng) {
  if (dim == 0) throw InvalidInput("random_pure_state: dimension 0");
  const ComplexMatrix v = ginibre(dim, 1, rng);
  return PureState::normalized(v.col(0));
}

ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, RngStream& rng) {
  if (cols == 0 || rows < cols) throw InvalidInput("random_isometry: need rows >= cols >= 1");
  const ComplexMatrix z = ginibre(rows, cols, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  const auto r = static_cast<Eigen::Index>(rows);
  const auto c = static_cast<Eigen::Index>(cols);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(r, c);
  // Fix the column phases by R's diagonal so the distribution is Haar.
  const ComplexMatrix& packed = qr.matrixQR();
  for (Eigen::Index k = 0; k < c; ++k) {
    const Complex d = packed(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return q;
}

ComplexMatrix random_unitary(std::size_t dim, RngStream& rng) {
  return random_isometry(dim, dim, rng);
}

KrausChannel random_kraus_channel(std::size_t dim, std::size_t q, RngStream& rng) {
  if (q == 0) throw InvalidInput("random_kraus_channel: q must be >= 1");
  if (dim == 0) throw InvalidInput("random_kraus_channel: dimension 0");
  const ComplexMatrix v = random_isometry(q * dim, dim, rng);
  const auto n = static_cast<Eigen::Index>(dim);
  std::vector<ComplexMatrix> ops;
  ops.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    ops.emplace_back(v.middleRows(static_cast<Eigen::Index>(i) * n, n));
  }
  return KrausChannel(std::move(ops));
}

DensityMatrix random_density_matrix(std::size_t dim, std::size_t rank, RngStream& rng) {
  if (dim == 0 || rank == 0) throw InvalidInput("random_density_matrix: dimension 0");
  const ComplexMatrix w = ginibre(dim, rank, rng);
  ComplexMatrix rho = w * w.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

}  // namespace qmetro
