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

#ifndef QMETRO_CHANNEL_QFI_HPP
#define QMETRO_CHANNEL_QFI_HPP

#include <optional>
#include <string_view>
#include <utility>

#include "qmetro/matrix_core.hpp"
#include "qmetro/quantum_channels.hpp"
#include "qmetro/tolerances.hpp"

namespace qmetro {

enum class ChannelQfiMethod { SpectralSpread, Eq22Minimization, PhaseShiftClosedForm };

std::string_view to_string(ChannelQfiMethod method);

struct ChannelQfiResult {
  double value = 0.0;
  ChannelQfiMethod method = ChannelQfiMethod::SpectralSpread;
  std::optional<double> minimizer_x;
  std::optional<PureState> optimal_probe;
};

struct CenteredGenerator {
  HermitianOperator centered;
  // centered = G + shift * I
  double shift = 0.0;
};

/// Hermitian part of i U^dag Udot. Throws NotUnitaryFamily when U is not
/// unitary or the anti-Hermitian residual exceeds the tolerance.
HermitianOperator local_generator(const ComplexMatrix& u, const ComplexMatrix& udot,
                                  const Tolerances& tol = {});

/// (lambda_max - lambda_min)^2 of the local generator, with the probe
/// (|v_min> + |v_max>)/sqrt(2) built from its extreme eigenvectors.
ChannelQfiResult channel_qfi_unitary(const UnitaryFamily& family, double theta,
                                     const Tolerances& tol = {});

ChannelQfiResult channel_qfi_phase_shift(const HermitianOperator& generator,
                                         const Tolerances& tol = {});

struct MinimizationOptions {
  // Explicit search interval; default is +-bracket_scale * ||Hdot(theta)||.
  std::optional<std::pair<double, double>> bracket;
};

/// 4 min_x ||Udot - i x U||^2, minimized by golden-section search.
ChannelQfiResult channel_qfi_eq22(const UnitaryFamily& family, double theta,
                                  const MinimizationOptions& options = {},
                                  const Tolerances& tol = {});

// ||Udot - i x U||
double eq22_objective(const UnitaryPoint& point, double x);

CenteredGenerator center_generator(const HermitianOperator& generator);

/// 4 ||G||^2 for the extended (or phase-shift) family's probe generator.
double upper_bound_norm(const UnitaryFamily& family, double theta);

/// H(theta) + theta * alpha * I.
UnitaryFamily linear_shift(const UnitaryFamily& family, double alpha);

}  // namespace qmetro

#endif  // QMETRO_CHANNEL_QFI_HPP
