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

#ifndef QMETRO_TOLERANCES_HPP
#define QMETRO_TOLERANCES_HPP

namespace qmetro {

// Every numerical threshold used by the library lives here. Operations take a
// `const Tolerances&` defaulting to these values.
struct Tolerances {
  // Relative asymmetry ||M - M^dag|| / (1 + ||M||) accepted by HermitianOperator.
  double hermitian_asymmetry = 1e-12;
  // Absolute eigenvalue gap below which divided differences use the diagonal branch.
  double eigen_degeneracy = 1e-12;

  double pure_state_norm = 1e-12;
  double density_hermitian = 1e-10;
  double density_trace = 1e-10;
  double density_min_eigenvalue = -1e-10;
  double kraus_completeness = 1e-9;
  double unitarity = 1e-9;

  // SLD denominators lambda_i + lambda_j <= sld_support_cutoff * tr(rho) are dropped.
  double sld_support_cutoff = 1e-11;
  double rho_dot_trace = 1e-9;
  // Eigenvalues below this fraction of the trace are treated as zero inside
  // fidelity square roots.
  double fidelity_eigen_cutoff = 1e-14;

  // Anti-Hermitian residual allowed in i U^dag Udot, relative to (1 + norm).
  double local_generator_residual = 1e-8;
  double golden_x_tolerance = 1e-10;
  double bracket_scale = 4.0;
  int bracket_max_doublings = 3;

  double commutator = 1e-9;
  double bures_dtheta = 1e-4;
  // Violation threshold on certification margins c_orig - c_ext.
  double violation = 1e-9;
};

}  // namespace qmetro

#endif  // QMETRO_TOLERANCES_HPP
