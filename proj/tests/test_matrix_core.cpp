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
#include <limits>
#include <numbers>

#include <doctest.h>

#include "qmetro/errors.hpp"
#include "qmetro/matrix_core.hpp"
#include "qmetro/quantum_channels.hpp"
#include "test_support.hpp"

using namespace qmetro;
using qmetro::testing::max_abs;

namespace {

const Complex I{0.0, 1.0};

HermitianOperator diag(std::initializer_list<double> v) {
  RealVector r(static_cast<Eigen::Index>(v.size()));
  Eigen::Index k = 0;
  for (double x : v) r(k++) = x;
  return HermitianOperator::diagonal(r);
}

}  // namespace

TEST_CASE("HermitianOperator symmetrizes tiny asymmetry and rejects large") {
  ComplexMatrix m(2, 2);
  m << 1.0, Complex(0.5, 1e-14), Complex(0.5, 0.0), 2.0;
  const HermitianOperator h(m);
  CHECK(max_abs(h.matrix() - h.matrix().adjoint()) == 0.0);

  m(0, 1) = 3.0;
  CHECK_THROWS_AS(HermitianOperator{m}, InvalidInput);
  CHECK_THROWS_AS(HermitianOperator{ComplexMatrix(2, 3)}, DimensionMismatch);
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(HermitianOperator{bad}, InvalidInput);
}

TEST_CASE("hermitian_eig: known spectra") {
  const EigenSystem sx = hermitian_eig(pauli::x());
  CHECK(sx.values(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(sx.values(1) == doctest::Approx(1.0).epsilon(1e-14));

  const EigenSystem d = hermitian_eig(diag({0.0, 1.0, 3.0}));
  CHECK(d.values(0) == doctest::Approx(0.0));
  CHECK(d.values(1) == doctest::Approx(1.0));
  CHECK(d.values(2) == doctest::Approx(3.0));
  CHECK(max_abs(d.vectors.cwiseAbs().cast<Complex>() - ComplexMatrix::Identity(3, 3)) < 1e-14);

  CHECK_THROWS_AS(hermitian_eig(HermitianOperator{}), InvalidInput);
}

TEST_CASE("hermitian_eig: reconstruction and orthonormality on GUE samples") {
  RngStream rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const HermitianOperator h = random_hermitian(6, 1.0, rng);
    const EigenSystem e = hermitian_eig(h);
    for (Eigen::Index k = 1; k < e.values.size(); ++k) CHECK(e.values(k - 1) <= e.values(k));
    CHECK(max_abs(e.vectors.adjoint() * e.vectors - ComplexMatrix::Identity(6, 6)) <= 1e-10);
    const ComplexMatrix rebuilt =
        e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    CHECK(max_abs(rebuilt - h.matrix()) <= 1e-10 * (1.0 + spectral_norm(h)));
  }
}

TEST_CASE("hermitian_eig is deterministic") {
  RngStream a(5);
  RngStream b(5);
  const EigenSystem ea = hermitian_eig(random_hermitian(5, 1.0, a));
  const EigenSystem eb = hermitian_eig(random_hermitian(5, 1.0, b));
  CHECK(ea.values == eb.values);
  CHECK(ea.vectors == eb.vectors);
}

TEST_CASE("spectral_norm: identity, diagonal, and the Gram oracle") {
  for (int d = 1; d <= 5; ++d) CHECK(spectral_norm(ComplexMatrix::Identity(d, d)) == doctest::Approx(1.0));
  CHECK(spectral_norm(diag({3.0, -5.0})) == doctest::Approx(5.0));
  CHECK(spectral_norm(diag({3.0, -5.0}).matrix()) == doctest::Approx(5.0));

  RngStream rng(3);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix a = testing::random_complex(4, 3, rng);
    const double n = spectral_norm(a);
    CHECK(n >= 0.0);
    CHECK(std::abs(n - testing::norm_via_gram(a)) <= 1e-10 * (1.0 + n));
  }
  CHECK_THROWS_AS(spectral_norm(ComplexMatrix()), InvalidInput);
}

TEST_CASE("property: Hermitian norm equals the extreme |eigenvalue|") {
  RngStream rng(17);
  for (int t = 0; t < 50; ++t) {
    const HermitianOperator h = random_hermitian(1 + rng.index(8), rng.uniform(0.1, 5.0), rng);
    const EigenSystem e = hermitian_eig(h);
    const double extreme =
        std::max(std::abs(e.values(0)), std::abs(e.values(e.values.size() - 1)));
    CHECK(std::abs(spectral_norm(h.matrix()) - extreme) <= 1e-10 * (1.0 + extreme));
  }
}

TEST_CASE("property: submultiplicativity and the C*-identity") {
  RngStream rng(23);
  for (int t = 0; t < 100; ++t) {
    const auto n = 1 + rng.index(6);
    const ComplexMatrix x = testing::random_complex(n, n, rng);
    const ComplexMatrix y = testing::random_complex(n, n, rng);
    CHECK(spectral_norm(ComplexMatrix(x * y)) <= spectral_norm(x) * spectral_norm(y) + 1e-10);
    const double nx = spectral_norm(x);
    CHECK(std::abs(spectral_norm(ComplexMatrix(x.adjoint() * x)) - nx * nx) <= 1e-9 * (1.0 + nx * nx));
  }
}

TEST_CASE("unitary_exp: closed forms") {
  const ComplexMatrix minus_identity = -ComplexMatrix::Identity(2, 2);
  CHECK(max_abs(unitary_exp(pauli::z(), std::numbers::pi) - minus_identity) < 1e-14);

  RngStream rng(1);
  const HermitianOperator h = random_hermitian(4, 1.0, rng);
  CHECK(max_abs(unitary_exp(h, 0.0) - ComplexMatrix::Identity(4, 4)) < 1e-14);

  const ComplexMatrix u = unitary_exp(diag({0.0, 1.0, 3.0}), 1.0);
  ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
  expected(0, 0) = 1.0;
  expected(1, 1) = std::exp(-I);
  expected(2, 2) = std::exp(-3.0 * I);
  CHECK(max_abs(u - expected) < 1e-14);
}

TEST_CASE("property: unitary_exp is unitary and matches scaling-and-squaring") {
  RngStream rng(29);
  for (int t = 0; t < 30; ++t) {
    const auto d = 1 + rng.index(8);
    const HermitianOperator h = random_hermitian(d, rng.uniform(0.1, 10.0), rng);
    const ComplexMatrix u = unitary_exp(h, 1.0);
    const auto n = static_cast<Eigen::Index>(d);
    CHECK(spectral_norm(ComplexMatrix(u.adjoint() * u - ComplexMatrix::Identity(n, n))) <= 1e-10);
    CHECK(max_abs(u - testing::expm_minus_i(h.matrix())) <= 1e-9);
  }
}

TEST_CASE("exp_derivative: commuting family and zero direction") {
  const double theta = 0.37;
  const HermitianOperator h = theta * pauli::z();
  const ComplexMatrix got = exp_derivative(h, pauli::z());
  const ComplexMatrix expected = -I * pauli::z().matrix() * unitary_exp(h, 1.0);
  CHECK(max_abs(got - expected) < 1e-14);

  RngStream rng(2);
  const HermitianOperator r = random_hermitian(3, 1.0, rng);
  CHECK(max_abs(exp_derivative(r, HermitianOperator::zero(3))) == 0.0);
  CHECK_THROWS_AS(exp_derivative(r, HermitianOperator::zero(2)), DimensionMismatch);
}

TEST_CASE("exp_derivative agrees with central differences (d <= 8)") {
  RngStream rng(31);
  for (int t = 0; t < 40; ++t) {
    const auto d = 1 + rng.index(8);
    const HermitianOperator h = random_hermitian(d, 1.0, rng);
    const HermitianOperator hdot = random_hermitian(d, 1.0, rng);
    const ComplexMatrix fd = testing::central_difference_expm(h.matrix(), hdot.matrix(), 1e-5);
    CHECK(max_abs(exp_derivative(h, hdot) - fd) <= 1e-6);
  }
}

TEST_CASE("exp_derivative stays accurate for nearly degenerate spectra") {
  // Gaps just above the degeneracy threshold: the naive divided difference
  // would lose about 4 digits here.
  RngStream rng(37);
  const ComplexMatrix v = random_unitary(3, rng);
  RealVector lambda(3);
  lambda << 0.5, 0.5 + 3e-12, 1.7;
  const HermitianOperator h(ComplexMatrix(v * lambda.cast<Complex>().asDiagonal() * v.adjoint()));
  const HermitianOperator hdot = random_hermitian(3, 1.0, rng);
  const ComplexMatrix fd = testing::central_difference_expm(h.matrix(), hdot.matrix(), 1e-5);
  CHECK(max_abs(exp_derivative(h, hdot) - fd) <= 1e-6);
}

TEST_CASE("kron: Pauli layouts, mixed product, norm") {
  RealVector a(4);
  a << 1, -1, 1, -1;
  CHECK(max_abs(kron(ComplexMatrix::Identity(2, 2), pauli::z().matrix()) -
                ComplexMatrix(a.cast<Complex>().asDiagonal())) == 0.0);
  a << 1, 1, -1, -1;
  CHECK(max_abs(kron(pauli::z().matrix(), ComplexMatrix::Identity(2, 2)) -
                ComplexMatrix(a.cast<Complex>().asDiagonal())) == 0.0);

  RngStream rng(41);
  for (int t = 0; t < 20; ++t) {
    const HermitianOperator x = random_hermitian(2 + rng.index(3), 1.0, rng);
    const HermitianOperator y = random_hermitian(2 + rng.index(3), 1.0, rng);
    const auto dx = static_cast<Eigen::Index>(x.dim());
    const auto dy = static_cast<Eigen::Index>(y.dim());
    const ComplexMatrix lhs = kron(x.matrix(), ComplexMatrix::Identity(dy, dy)) *
                              kron(ComplexMatrix::Identity(dx, dx), y.matrix());
    CHECK(max_abs(lhs - kron(x.matrix(), y.matrix())) < 1e-13);
    const double nk = spectral_norm(ComplexMatrix(kron(x.matrix(), y.matrix())));
    CHECK(nk == doctest::Approx(spectral_norm(x) * spectral_norm(y)).epsilon(1e-12));
  }
}

TEST_CASE("partial_trace: Bell state, products, trace preservation") {
  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const ComplexMatrix phi = bell * bell.adjoint();
  CHECK(max_abs(partial_trace(phi, 2, 2, Subsystem::A) - 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-15);
  CHECK(max_abs(partial_trace(phi, 2, 2, Subsystem::B) - 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-15);

  RngStream rng(43);
  const DensityMatrix rho = random_density_matrix(2, 2, rng);
  const DensityMatrix sigma = random_density_matrix(3, 3, rng);
  const ComplexMatrix prod = kron(rho.matrix(), sigma.matrix());
  CHECK(max_abs(partial_trace(prod, 2, 3, Subsystem::A) - rho.matrix()) < 1e-14);
  CHECK(max_abs(partial_trace(prod, 2, 3, Subsystem::B) - sigma.matrix()) < 1e-14);

  for (int t = 0; t < 20; ++t) {
    const std::size_t da = 1 + rng.index(4);
    const std::size_t db = 1 + rng.index(4);
    const DensityMatrix joint = random_density_matrix(da * db, da * db, rng);
    for (Subsystem keep : {Subsystem::A, Subsystem::B}) {
      const ComplexMatrix red = partial_trace(joint.matrix(), da, db, keep);
      CHECK(std::abs(red.trace() - Complex(1.0)) <= 1e-12);
      CHECK(max_abs(red - red.adjoint()) <= 1e-14);
    }
  }
  CHECK_THROWS_AS(partial_trace(phi, 2, 3, Subsystem::A), DimensionMismatch);
}

TEST_CASE("trotter_product: commuting, single step, first-order convergence") {
  const HermitianOperator z = pauli::z();
  for (std::size_t n : {1U, 3U, 16U}) {
    CHECK(max_abs(trotter_product(z, z, n) - unitary_exp(z + z, 1.0)) <= 1e-12);
  }
  const HermitianOperator x = pauli::x();
  CHECK(max_abs(trotter_product(x, z, 1) - unitary_exp(x, 1.0) * unitary_exp(z, 1.0)) < 1e-15);
  CHECK_THROWS_AS(trotter_product(x, z, 0), InvalidInput);

  const ComplexMatrix exact = unitary_exp(x + z, 1.0);
  double previous = 0.0;
  for (std::size_t n = 1; n <= 256; n *= 2) {
    const ComplexMatrix t = trotter_product(x, z, n);
    CHECK(spectral_norm(ComplexMatrix(t.adjoint() * t - ComplexMatrix::Identity(2, 2))) <= 1e-10);
    const double err = spectral_norm(ComplexMatrix(t - exact));
    if (n > 1) CHECK(err < previous);
    if (n >= 16) CHECK(previous / err == doctest::Approx(2.0).epsilon(0.2));
    previous = err;
  }
}
