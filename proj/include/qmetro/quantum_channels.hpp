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

#ifndef QMETRO_QUANTUM_CHANNELS_HPP
#define QMETRO_QUANTUM_CHANNELS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "qmetro/matrix_core.hpp"
#include "qmetro/rng.hpp"
#include "qmetro/tolerances.hpp"

namespace qmetro {

class PureState {
 public:
  PureState() = default;
  // Throws InvalidInput unless ||amplitudes||_2 = 1.
  explicit PureState(ComplexVector amplitudes, const Tolerances& tol = {});
  static PureState normalized(const ComplexVector& v);
  static PureState basis(std::size_t dim, std::size_t k);

  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  ComplexMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  ComplexVector amplitudes_;
};

class DensityMatrix {
 public:
  DensityMatrix() = default;
  // Validates Hermiticity, unit trace and positivity; stores the symmetrized matrix.
  explicit DensityMatrix(const ComplexMatrix& m, const Tolerances& tol = {});
  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Kraus representation rho -> sum_i A_i rho A_i^dag with sum_i A_i^dag A_i = I.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> operators, const Tolerances& tol = {});

  static KrausChannel identity(std::size_t dim);
  static KrausChannel unitary(const ComplexMatrix& u, const Tolerances& tol = {});
  // Rank-one transfers |j><k| / sqrt(d); maps every state to I/d.
  static KrausChannel fully_depolarizing(std::size_t dim);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  std::size_t size() const { return operators_.size(); }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }

  // Linear action on any operator with matching input dimension.
  ComplexMatrix apply(const ComplexMatrix& x) const;

 private:
  std::size_t dim_in_ = 0;
  std::size_t dim_out_ = 0;
  std::vector<ComplexMatrix> operators_;
};

double completeness_residual(const std::vector<ComplexMatrix>& operators);

DensityMatrix apply_kraus(const KrausChannel& channel, const DensityMatrix& rho,
                          const Tolerances& tol = {});

enum class FamilyKind { PhaseShift, Extended, General };

/// theta -> exp(-i H(theta)) with H and dH/dtheta known in closed form.
class UnitaryFamily {
 public:
  using HamiltonianFn = std::function<HermitianOperator(double)>;

  // H(theta) = theta G
  static UnitaryFamily phase_shift(const HermitianOperator& generator);
  // H(theta) = theta (G (x) I_ancilla) + H_int
  static UnitaryFamily extended(const HermitianOperator& generator, std::size_t ancilla_dim,
                                const HermitianOperator& interaction);
  static UnitaryFamily general(std::size_t dim, HamiltonianFn hamiltonian,
                               HamiltonianFn hamiltonian_derivative);

  std::size_t dim() const { return dim_; }
  FamilyKind kind() const { return kind_; }

  HermitianOperator hamiltonian_at(double theta) const;
  HermitianOperator hamiltonian_derivative_at(double theta) const;

  // Probe generator G for the phase-shift and extended kinds.
  const std::optional<HermitianOperator>& generator() const { return generator_; }
  const std::optional<HermitianOperator>& interaction() const { return interaction_; }
  std::size_t ancilla_dim() const { return ancilla_dim_; }

 private:
  UnitaryFamily() = default;

  std::size_t dim_ = 0;
  FamilyKind kind_ = FamilyKind::General;
  std::optional<HermitianOperator> generator_;
  std::optional<HermitianOperator> interaction_;
  // G (x) I, cached for the extended kind.
  std::optional<HermitianOperator> lifted_generator_;
  std::size_t ancilla_dim_ = 1;
  HamiltonianFn hamiltonian_;
  HamiltonianFn derivative_;
};

struct UnitaryPoint {
  ComplexMatrix u;
  ComplexMatrix udot;
};

UnitaryPoint evaluate_unitary(const UnitaryFamily& family, double theta,
                              const Tolerances& tol = {});

HermitianOperator random_hermitian(std::size_t dim, double scale, RngStream& rng);
PureState random_pure_state(std::size_t dim, RngStream& rng);
// Haar-random (rows x cols) isometry, rows >= cols.
ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, RngStream& rng);
ComplexMatrix random_unitary(std::size_t dim, RngStream& rng);
KrausChannel random_kraus_channel(std::size_t dim, std::size_t q, RngStream& rng);
// Ginibre mixed state W W^dag / tr(W W^dag), W of size dim x rank.
DensityMatrix random_density_matrix(std::size_t dim, std::size_t rank, RngStream& rng);

}  // namespace qmetro

#endif  // QMETRO_QUANTUM_CHANNELS_HPP
