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

#ifndef QMETRO_QFI_HPP
#define QMETRO_QFI_HPP

#include <cstddef>
#include <functional>

#include "qmetro/matrix_core.hpp"
#include "qmetro/quantum_channels.hpp"
#include "qmetro/tolerances.hpp"

namespace qmetro {

struct SldResult {
  HermitianOperator sld;
  double qfi = 0.0;
  std::size_t support_rank = 0;
};

/// Symmetric logarithmic derivative L and QFI tr(L^2 rho) of a state family
/// at one point, given rho and its derivative.
///
/// Works in the eigenbasis {lambda_i, |i>} of rho:
///   L_ij = 2 <i|rho_dot|j> / (lambda_i + lambda_j),
///   QFI  = 2 sum_ij |<i|rho_dot|j>|^2 / (lambda_i + lambda_j),
/// dropping every pair with lambda_i + lambda_j <= sld_support_cutoff * tr(rho).
/// Throws InvalidFamily if tr(rho_dot) is not zero.
SldResult sld_and_qfi(const DensityMatrix& rho, const HermitianOperator& rho_dot,
                      const Tolerances& tol = {});

/// 4 (<psi_dot|psi_dot> - |<psi|psi_dot>|^2)
double qfi_pure(const PureState& psi, const ComplexVector& psi_dot);

/// Root fidelity tr sqrt(sqrt(rho) sigma sqrt(rho)), evaluated in extended
/// precision as the trace norm of sqrt(rho) sqrt(sigma).
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma, const Tolerances& tol = {});

// sqrt(2 - 2 F(rho, sigma))
double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma,
                      const Tolerances& tol = {});

using DensityFamily = std::function<DensityMatrix(double)>;

/// 4 d_B(rho(theta), rho(theta + dtheta))^2 / dtheta^2.
double qfi_via_bures_limit(const DensityFamily& family, double theta, double dtheta,
                           const Tolerances& tol = {});

}  // namespace qmetro

#endif  // QMETRO_QFI_HPP
