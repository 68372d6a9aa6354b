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

#include <cmath>

#include <doctest.h>

#include "qmetro/errors.hpp"
#include "qmetro/quantum_channels.hpp"
#include "test_support.hpp"

using namespace qmetro;
using qmetro::testing::max_abs;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("PureState and DensityMatrix validation") {
  ComplexVector v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_AS(PureState{v}, InvalidInput);
  CHECK(PureState::normalized(v).amplitudes().norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(PureState::normalized(ComplexVector::Zero(3)), InvalidInput);

  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix{m}, InvalidInput);  // trace 2
  m << 1.2, 0, 0, -0.2;
  CHECK_THROWS_AS(DensityMatrix{m}, InvalidInput);  // negative eigenvalue
  m << 0.5, 0.1, 0.3, 0.5;
  CHECK_THROWS_AS(DensityMatrix{m}, InvalidInput);  // not Hermitian
  CHECK_NOTHROW(DensityMatrix::maximally_mixed(4));
}

TEST_CASE("KrausChannel rejects incomplete sets and mismatched shapes") {
  CHECK_THROWS_AS(KrausChannel({0.5 * ComplexMatrix::Identity(2, 2)}), InvalidInput);
  CHECK_THROWS_AS(KrausChannel({ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(3, 3)}),
                  DimensionMismatch);
  CHECK_THROWS_AS(KrausChannel(std::vector<ComplexMatrix>{}), InvalidInput);
}

TEST_CASE("apply_kraus: identity, full depolarization, random channels") {
  RngStream rng(101);
  const DensityMatrix rho = random_density_matrix(3, 3, rng);
  CHECK(max_abs(apply_kraus(KrausChannel::identity(3), rho).matrix() - rho.matrix()) < 1e-15);

  const DensityMatrix out = apply_kraus(KrausChannel::fully_depolarizing(3), rho);
  CHECK(max_abs(out.matrix() - ComplexMatrix::Identity(3, 3) / 3.0) < 1e-15);

  for (int t = 0; t < 20; ++t) {
    const KrausChannel ch = random_kraus_channel(3, 3, rng);
    const DensityMatrix r = random_density_matrix(3, 1 + rng.index(3), rng);
    CHECK(std::abs(apply_kraus(ch, r).matrix().trace() - Complex(1.0)) <= 1e-10);
  }

  const KrausChannel four = random_kraus_channel(3, 4, rng);
  const DensityMatrix mixed = apply_kraus(four, DensityMatrix::maximally_mixed(3));
  CHECK(std::abs(mixed.matrix().trace() - Complex(1.0)) <= 1e-10);

  CHECK_THROWS_AS(apply_kraus(four, DensityMatrix::maximally_mixed(2)), DimensionMismatch);
}

TEST_CASE("random_kraus_channel: completeness and the q = 1 unitary case") {
  RngStream rng(103);
  for (std::size_t q = 1; q <= 5; ++q) {
    const KrausChannel ch = random_kraus_channel(1 + rng.index(4), q, rng);
    CHECK(ch.size() == q);
    CHECK(completeness_residual(ch.operators()) <= 1e-9);
  }
  const KrausChannel u = random_kraus_channel(4, 1, rng);
  const ComplexMatrix& a = u.operators().front();
  CHECK(max_abs(a * a.adjoint() - ComplexMatrix::Identity(4, 4)) <= 1e-12);
  CHECK_THROWS_AS(random_kraus_channel(2, 0, rng), InvalidInput);
}

TEST_CASE("property: Kraus rotation B_j = sum_k u_jk A_k leaves the channel unchanged") {
  RngStream rng(107);
  for (int t = 0; t < 10; ++t) {
    const std::size_t d = 2 + rng.index(3);
    const std::size_t q = 1 + rng.index(4);
    const KrausChannel ch = random_kraus_channel(d, q, rng);
    const ComplexMatrix u = random_unitary(q, rng);
    std::vector<ComplexMatrix> rotated;
    for (std::size_t j = 0; j < q; ++j) {
      ComplexMatrix b = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
      for (std::size_t k = 0; k < q; ++k) {
        b += u(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) * ch.operators()[k];
      }
      rotated.push_back(b);
    }
    const KrausChannel other(rotated);
    for (int s = 0; s < 10; ++s) {
      const DensityMatrix rho = random_density_matrix(d, 1 + rng.index(d), rng);
      CHECK(max_abs(apply_kraus(ch, rho).matrix() - apply_kraus(other, rho).matrix()) <= 1e-9);
    }
  }
}

TEST_CASE("property: unitary channels preserve spectra") {
  RngStream rng(109);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + rng.index(4);
    const DensityMatrix rho = random_density_matrix(d, d, rng);
    const DensityMatrix out = apply_kraus(KrausChannel::unitary(random_unitary(d, rng)), rho);
    const RealVector before = hermitian_eig(HermitianOperator(rho.matrix())).values;
    const RealVector after = hermitian_eig(HermitianOperator(out.matrix())).values;
    CHECK((before - after).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("evaluate_unitary: phase shifts in closed form") {
  const UnitaryPoint p0 = evaluate_unitary(UnitaryFamily::phase_shift(pauli::z()), 0.0);
  CHECK(max_abs(p0.u - ComplexMatrix::Identity(2, 2)) < 1e-15);
  CHECK(max_abs(p0.udot + I * pauli::z().matrix()) < 1e-15);

  RealVector g(3);
  g << -0.4, 1.0, 2.5;
  const double theta = 0.9;
  const UnitaryPoint p = evaluate_unitary(UnitaryFamily::phase_shift(HermitianOperator::diagonal(g)), theta);
  for (Eigen::Index k = 0; k < 3; ++k) {
    CHECK(std::abs(p.u(k, k) - std::exp(-I * theta * g(k))) < 1e-14);
    CHECK(std::abs(p.udot(k, k) + I * g(k) * std::exp(-I * theta * g(k))) < 1e-14);
  }
}

TEST_CASE("evaluate_unitary: extended family derivative matches finite differences") {
  const HermitianOperator hint = kron(pauli::x(), pauli::x());
  const UnitaryFamily fam = UnitaryFamily::extended(pauli::z(), 2, hint);
  const UnitaryPoint p = evaluate_unitary(fam, 0.7);
  CHECK(max_abs(p.udot - testing::central_difference_family(fam, 0.7, 1e-5)) <= 1e-6);

  RngStream rng(113);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 1 + rng.index(4);
    const std::size_t dp = 1 + rng.index(2);
    const UnitaryFamily f = UnitaryFamily::extended(random_hermitian(d, 1.0, rng), dp,
                                                    random_hermitian(d * dp, 1.0, rng));
    const double theta = rng.uniform(0.0, 6.0);
    const UnitaryPoint q = evaluate_unitary(f, theta);
    const auto n = static_cast<Eigen::Index>(d * dp);
    CHECK(spectral_norm(ComplexMatrix(q.u.adjoint() * q.u - ComplexMatrix::Identity(n, n))) <= 1e-10);
    CHECK(max_abs(q.udot - testing::central_difference_family(f, theta, 1e-5)) <= 1e-6);
  }
}

TEST_CASE("UnitaryFamily kinds carry exact H and Hdot") {
  RngStream rng(127);
  const HermitianOperator g = random_hermitian(2, 1.0, rng);
  const HermitianOperator hint = random_hermitian(6, 1.0, rng);
  const UnitaryFamily ext = UnitaryFamily::extended(g, 3, hint);
  const HermitianOperator lifted = kron(g, HermitianOperator::identity(3));
  CHECK(max_abs(ext.hamiltonian_at(1.3).matrix() - (1.3 * lifted.matrix() + hint.matrix())) == 0.0);
  CHECK(max_abs(ext.hamiltonian_derivative_at(1.3).matrix() - lifted.matrix()) == 0.0);

  const UnitaryFamily ps = UnitaryFamily::phase_shift(g);
  CHECK(max_abs(ps.hamiltonian_at(-2.0).matrix() - (-2.0 * g.matrix())) == 0.0);
  CHECK(max_abs(ps.hamiltonian_derivative_at(-2.0).matrix() - g.matrix()) == 0.0);

  CHECK_THROWS_AS(UnitaryFamily::extended(g, 2, hint), DimensionMismatch);
}

TEST_CASE("random_hermitian: zero scale, determinism, zero-mean entries") {
  RngStream rng(131);
  CHECK(max_abs(random_hermitian(3, 0.0, rng).matrix()) == 0.0);
  CHECK_THROWS_AS(random_hermitian(3, -1.0, rng), InvalidInput);

  RngStream a = RngStream::substream(9, "gen", 4);
  RngStream b = RngStream::substream(9, "gen", 4);
  CHECK(random_hermitian(4, 1.0, a).matrix() == random_hermitian(4, 1.0, b).matrix());

  // Off-diagonal entries of (X+X^dag)/2 have E|h|^2 = 1/2; diagonal ones
  // are real with variance 1/2. The mean over N entries has sd sqrt(1/(2N)).
  RngStream s(137);
  Complex sum{0.0, 0.0};
  std::size_t count = 0;
  for (int k = 0; k < 100; ++k) {
    const HermitianOperator h = random_hermitian(50, 1.0, s);
    sum += h.matrix().sum();
    count += 50 * 50;
  }
  const Complex mean = sum / static_cast<double>(count);
  const double sd = std::sqrt(0.5 / static_cast<double>(count));
  CHECK(std::abs(mean.real()) <= 3.0 * sd);
  CHECK(std::abs(mean.imag()) <= 3.0 * sd);
}

TEST_CASE("random_pure_state: norm, dimension one, Haar first moment") {
  RngStream rng(139);
  const PureState one = random_pure_state(1, rng);
  CHECK(std::abs(one.amplitudes()(0)) == doctest::Approx(1.0));
  double sum = 0.0;
  double sum_sq = 0.0;
  const int samples = 1000;
  for (int k = 0; k < samples; ++k) {
    const PureState psi = random_pure_state(8, rng);
    CHECK(std::abs(psi.amplitudes().norm() - 1.0) <= 1e-12);
    const double p = std::norm(psi.amplitudes()(0));
    sum += p;
    sum_sq += p * p;
  }
  // For Haar states |<e0|psi>|^2 ~ Beta(1, d-1): mean 1/d, variance (d-1)/(d^2 (d+1)).
  const double d = 8.0;
  const double sd = std::sqrt((d - 1.0) / (d * d * (d + 1.0)) / samples);
  CHECK(std::abs(sum / samples - 1.0 / d) <= 3.0 * sd);
}

TEST_CASE("RngStream substreams are independent of consumption order") {
  RngStream a = RngStream::substream(42, "trial", 7);
  RngStream noise = RngStream::substream(42, "trial", 6);
  for (int k = 0; k < 100; ++k) noise.normal();
  RngStream b = RngStream::substream(42, "trial", 7);
  CHECK(a.uniform(0, 1) == b.uniform(0, 1));
  CHECK(a.child("x").key() == b.child("x").key());
  CHECK(RngStream::substream(42, "trial", 7).key() != RngStream::substream(42, "trial", 8).key());
  CHECK(RngStream::substream(42, "trial", 7).key() != RngStream::substream(42, "other", 7).key());
  CHECK(RngStream::substream(42, "trial", 7).key() != RngStream::substream(43, "trial", 7).key());
}
