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

#include "qmetro/channel_qfi.hpp"

#include <cmath>
#include <string>

#include "qmetro/errors.hpp"
#include "qmetro/golden_section.hpp"

namespace qmetro {

namespace {

constexpr Complex kI{0.0, 1.0};

ChannelQfiResult spread_result(const EigenSystem& eig, ChannelQfiMethod method,
                               const Tolerances& tol) {
  const Eigen::Index last = eig.values.size() - 1;
  const double spread = eig.values(last) - eig.values(0);
  ChannelQfiResult result;
  result.method = method;
  if (last == 0 || spread <= tol.eigen_degeneracy) {
    // No parameter dependence beyond a global phase.
    result.value = 0.0;
    result.optimal_probe = PureState::normalized(eig.vectors.col(0));
    return result;
  }
  result.value = spread * spread;
  result.optimal_probe =
      PureState::normalized(ComplexVector(eig.vectors.col(0) + eig.vectors.col(last)));
  return result;
}

}  // namespace

std::string_view to_string(ChannelQfiMethod method) {
  switch (method) {
    case ChannelQfiMethod::SpectralSpread:
      return "spectral-spread";
    case ChannelQfiMethod::Eq22Minimization:
      return "eq22-minimization";
    case ChannelQfiMethod::PhaseShiftClosedForm:
      return "phase-shift-closed-form";
  }
  return "unknown";
}

HermitianOperator local_generator(const ComplexMatrix& u, const ComplexMatrix& udot,
                                  const Tolerances& tol) {
  require_valid(u, "local_generator");
  require_valid(udot, "local_generator");
  if (u.rows() != u.cols() || udot.rows() != u.rows() || udot.cols() != u.cols()) {
    throw DimensionMismatch("local_generator: U and Udot must be square of equal size");
  }
  const double unitarity =
      spectral_norm(ComplexMatrix(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())));
  if (unitarity > tol.unitarity) {
    throw NotUnitaryFamily("local_generator: U is not unitary (residual " +
                           std::to_string(unitarity) + ")");
  }
  const ComplexMatrix m = kI * (u.adjoint() * udot);
  const ComplexMatrix hermitian = 0.5 * (m + m.adjoint());
  const double residual = spectral_norm(ComplexMatrix(0.5 * (m - m.adjoint())));
  if (residual > tol.local_generator_residual * (1.0 + spectral_norm(hermitian))) {
    throw NotUnitaryFamily("local_generator: i U^dag Udot is not Hermitian (residual " +
                           std::to_string(residual) + ")");
  }
  return HermitianOperator(hermitian);
}

ChannelQfiResult channel_qfi_unitary(const UnitaryFamily& family, double theta,
                                     const Tolerances& tol) {
  const UnitaryPoint point = evaluate_unitary(family, theta, tol);
  const HermitianOperator gen = local_generator(point.u, point.udot, tol);
  return spread_result(hermitian_eig(gen), ChannelQfiMethod::SpectralSpread, tol);
}

ChannelQfiResult channel_qfi_phase_shift(const HermitianOperator& generator,
                                         const Tolerances& tol) {
  return spread_result(hermitian_eig(generator), ChannelQfiMethod::PhaseShiftClosedForm, tol);
}

double eq22_objective(const UnitaryPoint& point, double x) {
  return spectral_norm(ComplexMatrix(point.udot - (kI * x) * point.u));
}

ChannelQfiResult channel_qfi_eq22(const UnitaryFamily& family, double theta,
                                  const MinimizationOptions& options, const Tolerances& tol) {
  const UnitaryPoint point = evaluate_unitary(family, theta, tol);
  auto f = [&point](double x) { return eq22_objective(point, x); };

  double lo = 0.0;
  double hi = 0.0;
  if (options.bracket) {
    lo = options.bracket->first;
    hi = options.bracket->second;
    if (!(lo < hi)) throw InvalidInput("channel_qfi_eq22: bracket must satisfy lo < hi");
  } else {
    double half = tol.bracket_scale * spectral_norm(family.hamiltonian_derivative_at(theta));
    // Hdot = 0 gives f(x) = |x|; any non-degenerate interval around 0 works.
    if (!(half > 0.0)) half = 1.0;
    lo = -half;
    hi = half;
  }

  for (int attempt = 0; attempt <= tol.bracket_max_doublings; ++attempt) {
    const double width = hi - lo;
    const double probe = 1e-6 * width;
    const bool falls_left = f(lo) < f(lo + probe);
    const bool falls_right = f(hi) < f(hi - probe);
    if (!falls_left && !falls_right) {
      const ScalarMinimum best = golden_section_minimize(f, lo, hi, tol.golden_x_tolerance);
      ChannelQfiResult result;
      result.method = ChannelQfiMethod::Eq22Minimization;
      result.value = 4.0 * best.fx * best.fx;
      result.minimizer_x = best.x;
      return result;
    }
    const double center = 0.5 * (lo + hi);
    lo = center - width;
    hi = center + width;
  }
  throw BracketFailure("channel_qfi_eq22: minimizer not bracketed after widening");
}

CenteredGenerator center_generator(const HermitianOperator& generator) {
  const EigenSystem eig = hermitian_eig(generator);
  const double mid = 0.5 * (eig.values(0) + eig.values(eig.values.size() - 1));
  return {generator.shifted(-mid), -mid};
}

double upper_bound_norm(const UnitaryFamily& family, double /*theta*/) {
  if (family.kind() == FamilyKind::General || !family.generator()) {
    throw WrongFamilyKind("upper_bound_norm: family has no phase-shift generator");
  }
  const double norm = spectral_norm(*family.generator());
  return 4.0 * norm * norm;
}

UnitaryFamily linear_shift(const UnitaryFamily& family, double alpha) {
  if (!std::isfinite(alpha)) throw InvalidInput("linear_shift: non-finite alpha");
  switch (family.kind()) {
    case FamilyKind::PhaseShift:
      return UnitaryFamily::phase_shift(family.generator()->shifted(alpha));
    case FamilyKind::Extended:
      // theta (G (x) I + alpha I (x) I) = theta (G + alpha I) (x) I
      return UnitaryFamily::extended(family.generator()->shifted(alpha), family.ancilla_dim(),
                                     *family.interaction());
    case FamilyKind::General:
      break;
  }
  return UnitaryFamily::general(
      family.dim(),
      [family, alpha](double theta) { return family.hamiltonian_at(theta).shifted(theta * alpha); },
      [family, alpha](double theta) {
        return family.hamiltonian_derivative_at(theta).shifted(alpha);
      });
}

}  // namespace qmetro
