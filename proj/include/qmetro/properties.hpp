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

#ifndef QMETRO_PROPERTIES_HPP
#define QMETRO_PROPERTIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qmetro/qfi.hpp"
#include "qmetro/rng.hpp"
#include "qmetro/tolerances.hpp"

namespace qmetro {

// Outcome of one randomized property suite. `worst` is the largest observed
// excess over the property (0 or negative when it holds with room to spare).
struct PropertyCheck {
  std::string name;
  std::size_t cases = 0;
  double worst = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double runtime_ms = 0.0;
};

struct StateFamilyPoint {
  DensityMatrix rho;
  HermitianOperator rho_dot;
};

// Full-rank random state with a random traceless Hermitian derivative.
StateFamilyPoint random_family_point(std::size_t dim, RngStream& rng);

// QFI(E(rho), E(rho_dot)) <= QFI(rho, rho_dot) for random CPTP maps E.
PropertyCheck check_monotonicity(std::size_t cases, RngStream& rng, double slack = 1e-8);
// Equality of the above under random unitary channels.
PropertyCheck check_unitary_invariance(std::size_t cases, RngStream& rng, double slack = 1e-8);
// Joint convexity on mixtures with weights 0.1, ..., 0.9.
PropertyCheck check_convexity(std::size_t cases, RngStream& rng, double slack = 1e-8);
// QFI of a product family is the sum.
PropertyCheck check_additivity(std::size_t cases, RngStream& rng, double slack = 1e-7);

struct BuresRow {
  double dtheta = 0.0;
  double qfi_limit = 0.0;
  double qfi_sld = 0.0;
  double abs_error = 0.0;
};

struct BuresConvergence {
  std::string family;
  double expected_qfi = 0.0;
  std::vector<BuresRow> rows;
  std::vector<double> ratios;  // abs_error[k] / abs_error[k+1]
  bool passed = false;
};

// Qubit phase shift exp(-i theta sigma_z) on |+>, QFI 4.
DensityMatrix phase_shift_plus_state(double theta);
// 1/2 (I + r (cos theta sigma_x + sin theta sigma_y)), QFI r^2.
DensityMatrix rotating_bloch_state(double theta, double r);

/// Bures-limit error against the SLD value on a dtheta ladder; passes when
/// each halving shrinks the error by 4 within the relative band.
BuresConvergence bures_convergence(const std::string& name, const DensityFamily& family,
                                   const HermitianOperator& rho_dot, double theta,
                                   double expected_qfi, const std::vector<double>& dthetas,
                                   double band = 0.3, const Tolerances& tol = {});

std::vector<BuresConvergence> standard_bures_checks(const std::vector<double>& dthetas,
                                                    const Tolerances& tol = {});

}  // namespace qmetro

#endif  // QMETRO_PROPERTIES_HPP
