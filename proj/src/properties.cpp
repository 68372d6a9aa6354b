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

#include "qmetro/properties.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "qmetro/errors.hpp"

namespace qmetro {

namespace {

constexpr Complex kI{0.0, 1.0};

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

PropertyCheck finish(std::string name, std::size_t cases, double worst, double tolerance,
                     const Stopwatch& clock) {
  PropertyCheck check;
  check.name = std::move(name);
  check.cases = cases;
  check.worst = worst;
  check.tolerance = tolerance;
  check.passed = worst <= tolerance;
  check.runtime_ms = clock.elapsed_ms();
  return check;
}

HermitianOperator push_forward(const KrausChannel& channel, const HermitianOperator& x) {
  return HermitianOperator(channel.apply(x.matrix()));
}

std::size_t pick_dim(RngStream& rng, std::size_t lo, std::size_t hi) {
  return lo + rng.index(hi - lo + 1);
}

}  // namespace

StateFamilyPoint random_family_point(std::size_t dim, RngStream& rng) {
  // Mixing with I/d keeps the spectrum away from zero, so no family crosses
  // a rank boundary.
  const DensityMatrix w = random_density_matrix(dim, dim, rng);
  const auto n = static_cast<Eigen::Index>(dim);
  const ComplexMatrix mixed =
      0.8 * w.matrix() + 0.2 * ComplexMatrix::Identity(n, n) / static_cast<double>(dim);
  const HermitianOperator x = random_hermitian(dim, 0.3, rng);
  const double mean = x.matrix().trace().real() / static_cast<double>(dim);
  return {DensityMatrix(mixed), x.shifted(-mean)};
}

PropertyCheck check_monotonicity(std::size_t cases, RngStream& rng, double slack) {
  const Stopwatch clock;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t d = pick_dim(rng, 2, 4);
    const std::size_t q = pick_dim(rng, 1, 4);
    const StateFamilyPoint p = random_family_point(d, rng);
    const KrausChannel channel = random_kraus_channel(d, q, rng);
    const double before = sld_and_qfi(p.rho, p.rho_dot).qfi;
    const double after =
        sld_and_qfi(apply_kraus(channel, p.rho), push_forward(channel, p.rho_dot)).qfi;
    worst = std::max(worst, after - before);
  }
  return finish("monotonicity", cases, worst, slack, clock);
}

PropertyCheck check_unitary_invariance(std::size_t cases, RngStream& rng, double slack) {
  const Stopwatch clock;
  double worst = 0.0;
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t d = pick_dim(rng, 2, 4);
    const StateFamilyPoint p = random_family_point(d, rng);
    const KrausChannel channel = KrausChannel::unitary(random_unitary(d, rng));
    const double before = sld_and_qfi(p.rho, p.rho_dot).qfi;
    const double after =
        sld_and_qfi(apply_kraus(channel, p.rho), push_forward(channel, p.rho_dot)).qfi;
    worst = std::max(worst, std::abs(after - before));
  }
  return finish("unitary-invariance", cases, worst, slack, clock);
}

PropertyCheck check_convexity(std::size_t cases, RngStream& rng, double slack) {
  const Stopwatch clock;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t d = pick_dim(rng, 2, 4);
    const StateFamilyPoint a = random_family_point(d, rng);
    const StateFamilyPoint b = random_family_point(d, rng);
    const double qa = sld_and_qfi(a.rho, a.rho_dot).qfi;
    const double qb = sld_and_qfi(b.rho, b.rho_dot).qfi;
    for (int k = 1; k <= 9; ++k) {
      const double lambda = 0.1 * k;
      const DensityMatrix mix(lambda * a.rho.matrix() + (1.0 - lambda) * b.rho.matrix());
      const HermitianOperator mix_dot = lambda * a.rho_dot + (1.0 - lambda) * b.rho_dot;
      const double lhs = sld_and_qfi(mix, mix_dot).qfi;
      worst = std::max(worst, lhs - (lambda * qa + (1.0 - lambda) * qb));
    }
  }
  return finish("convexity", cases, worst, slack, clock);
}

PropertyCheck check_additivity(std::size_t cases, RngStream& rng, double slack) {
  const Stopwatch clock;
  double worst = 0.0;
  for (std::size_t c = 0; c < cases; ++c) {
    const StateFamilyPoint a = random_family_point(pick_dim(rng, 2, 3), rng);
    const StateFamilyPoint b = random_family_point(pick_dim(rng, 2, 3), rng);
    const DensityMatrix joint(kron(a.rho.matrix(), b.rho.matrix()));
    const HermitianOperator joint_dot(
        ComplexMatrix(kron(a.rho_dot.matrix(), b.rho.matrix()) +
                      kron(a.rho.matrix(), b.rho_dot.matrix())));
    const double sum = sld_and_qfi(a.rho, a.rho_dot).qfi + sld_and_qfi(b.rho, b.rho_dot).qfi;
    worst = std::max(worst, std::abs(sld_and_qfi(joint, joint_dot).qfi - sum));
  }
  return finish("additivity", cases, worst, slack, clock);
}

DensityMatrix phase_shift_plus_state(double theta) {
  ComplexVector psi(2);
  psi << std::exp(-kI * theta), std::exp(kI * theta);
  return DensityMatrix::from_pure(PureState::normalized(psi));
}

DensityMatrix rotating_bloch_state(double theta, double r) {
  const ComplexMatrix m = 0.5 * (ComplexMatrix::Identity(2, 2) +
                                 r * (std::cos(theta) * pauli::x().matrix() +
                                      std::sin(theta) * pauli::y().matrix()));
  return DensityMatrix(m);
}

BuresConvergence bures_convergence(const std::string& name, const DensityFamily& family,
                                   const HermitianOperator& rho_dot, double theta,
                                   double expected_qfi, const std::vector<double>& dthetas,
                                   double band, const Tolerances& tol) {
  BuresConvergence out;
  out.family = name;
  out.expected_qfi = expected_qfi;
  const double sld = sld_and_qfi(family(theta), rho_dot, tol).qfi;
  for (double h : dthetas) {
    BuresRow row;
    row.dtheta = h;
    row.qfi_limit = qfi_via_bures_limit(family, theta, h, tol);
    row.qfi_sld = sld;
    row.abs_error = std::abs(row.qfi_limit - sld);
    out.rows.push_back(row);
  }
  out.passed = out.rows.size() >= 2;
  for (std::size_t k = 0; k + 1 < out.rows.size(); ++k) {
    const double ratio = out.rows[k].abs_error / out.rows[k + 1].abs_error;
    out.ratios.push_back(ratio);
    if (!(std::abs(ratio - 4.0) <= 4.0 * band)) out.passed = false;
  }
  return out;
}

std::vector<BuresConvergence> standard_bures_checks(const std::vector<double>& dthetas,
                                                    const Tolerances& tol) {
  std::vector<BuresConvergence> out;

  const DensityMatrix plus = phase_shift_plus_state(0.0);
  const ComplexMatrix sz = pauli::z().matrix();
  const HermitianOperator plus_dot(
      ComplexMatrix(-kI * (sz * plus.matrix() - plus.matrix() * sz)));
  out.push_back(bures_convergence("phase-shift |+>", phase_shift_plus_state, plus_dot, 0.0, 4.0,
                                  dthetas, 0.3, tol));

  constexpr double r = 0.6;
  constexpr double theta = 0.0;
  const HermitianOperator bloch_dot(
      ComplexMatrix(0.5 * r * (-std::sin(theta) * pauli::x().matrix() +
                               std::cos(theta) * pauli::y().matrix())));
  out.push_back(bures_convergence(
      "rotating Bloch r=0.6", [](double t) { return rotating_bloch_state(t, r); }, bloch_dot,
      theta, r * r, dthetas, 0.3, tol));
  return out;
}

}  // namespace qmetro
