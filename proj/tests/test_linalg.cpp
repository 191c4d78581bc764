// Copyright 2026 The polsim Authors
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
#include <random>

#include <doctest.h>

#include "polsim/linalg.hpp"
#include "test_util.hpp"

using namespace polsim;
using namespace polsim::testing;

TEST_CASE("hermitian_eig diagonalizes sigma_z") {
  const ComplexMatrix sz(2, 2, {1.0, 0.0, 0.0, -1.0});
  const EigenDecomposition eig = hermitian_eig(sz);
  CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig on the identity returns an orthonormal basis") {
  const ComplexMatrix id = ComplexMatrix::identity(3);
  const EigenDecomposition eig = hermitian_eig(id);
  for (double lam : eig.eigenvalues) CHECK(lam == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const cplx dot = inner(eig.eigenvectors.col(i), eig.eigenvectors.col(j));
      CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-10);
    }
}

TEST_CASE("hermitian_eig reproduces the two-level avoided-crossing splitting") {
  // Single excitation block of the Jaynes-Cummings ladder at detuning/2pi = 5,
  // g/2pi = 0.5: splitting sqrt(det^2 + 4g^2) = 2pi*sqrt(26).
  const double det = kTwoPi * 5.0;
  const double g = kTwoPi * 0.5;
  const ComplexMatrix block(2, 2, {-det / 2, g, g, det / 2});
  const EigenDecomposition eig = hermitian_eig(block);
  const double splitting = eig.eigenvalues[1] - eig.eigenvalues[0];
  CHECK(splitting == doctest::Approx(kTwoPi * std::sqrt(26.0)).epsilon(1e-12));
  CHECK(splitting == doctest::Approx(kTwoPi * 5.0990195135927845).epsilon(1e-12));
}

TEST_CASE("hermitian_eig validates its input") {
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), std::invalid_argument);
  ComplexMatrix nonherm(2, 2, {0.0, 1.0, 0.0, 0.0});
  CHECK_THROWS_AS(hermitian_eig(nonherm), std::invalid_argument);
}

TEST_CASE("hermitian_eig reconstruction, residual and orthonormality") {
  std::mt19937 rng(42);
  for (std::size_t n : {2u, 3u, 5u, 8u, 16u, 33u, 64u}) {
    const ComplexMatrix m = random_hermitian(rng, n);
    const EigenDecomposition eig = hermitian_eig(m);
    const double scale = m.max_abs();

    for (std::size_t k = 1; k < n; ++k) CHECK(eig.eigenvalues[k - 1] <= eig.eigenvalues[k]);

    ComplexMatrix recon(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          recon(i, j) += eig.eigenvalues[k] * eig.eigenvectors(i, k) *
                         std::conj(eig.eigenvectors(j, k));
    CHECK(max_abs_diff(recon, m) < 1e-9 * std::max(scale, 1.0));

    for (std::size_t k = 0; k < n; ++k) {
      const ComplexMatrix v = eig.eigenvectors.col(k);
      ComplexMatrix resid = m * v;
      resid -= v * cplx(eig.eigenvalues[k]);
      CHECK(resid.max_abs() < 1e-10 * std::max(scale, 1.0));
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const cplx dot = inner(eig.eigenvectors.col(a), eig.eigenvectors.col(b));
        CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) < 1e-10);
      }
  }
}

TEST_CASE("hermitian_eig is deterministic and phase-fixed") {
  std::mt19937 rng(7);
  const ComplexMatrix m = random_hermitian(rng, 12);
  const EigenDecomposition a = hermitian_eig(m);
  const EigenDecomposition b = hermitian_eig(m);
  CHECK(a.eigenvectors == b.eigenvectors);
  CHECK(a.eigenvalues == b.eigenvalues);
  for (std::size_t k = 0; k < 12; ++k) {
    double best = 0.0;
    cplx best_val = 0.0;
    for (std::size_t i = 0; i < 12; ++i)
      if (std::abs(a.eigenvectors(i, k)) > best) {
        best = std::abs(a.eigenvectors(i, k));
        best_val = a.eigenvectors(i, k);
      }
    CHECK(best_val.real() > 0.0);
    CHECK(std::abs(best_val.imag()) < 1e-12);
  }
}

TEST_CASE("hermitian_eig handles degenerate eigenvalues") {
  // 2x2 degenerate block embedded in a 4x4 matrix.
  ComplexMatrix m(4, 4);
  m(0, 0) = 2.0;
  m(1, 1) = 2.0;
  m(2, 2) = -1.0;
  m(3, 3) = 5.0;
  const EigenDecomposition eig = hermitian_eig(m);
  CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(eig.eigenvalues[1] == doctest::Approx(2.0));
  CHECK(eig.eigenvalues[2] == doctest::Approx(2.0));
  CHECK(eig.eigenvalues[3] == doctest::Approx(5.0));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      CHECK(std::abs(inner(eig.eigenvectors.col(a), eig.eigenvectors.col(b))) < 1e-10);
}

TEST_CASE("kron identities") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  const ComplexMatrix i3 = ComplexMatrix::identity(3);
  CHECK(kron(i2, i3) == ComplexMatrix::identity(6));

  const ComplexMatrix sz(2, 2, {1.0, 0.0, 0.0, -1.0});
  const ComplexMatrix expect(4, 4,
                             {1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0,
                              0.0, 0.0, -1.0});
  CHECK(kron(sz, i2) == expect);

  std::mt19937 rng(3);
  const ComplexMatrix a = random_matrix(rng, 2, 2);
  const ComplexMatrix b = random_matrix(rng, 11, 11);
  const ComplexMatrix k = kron(a, b);
  CHECK(k.rows() == 22);
  CHECK(k.cols() == 22);
}

TEST_CASE("kron block structure") {
  std::mt19937 rng(11);
  const ComplexMatrix a = random_matrix(rng, 3, 2);
  const ComplexMatrix b = random_matrix(rng, 2, 4);
  const ComplexMatrix k = kron(a, b);
  for (std::size_t ia = 0; ia < 3; ++ia)
    for (std::size_t ja = 0; ja < 2; ++ja)
      for (std::size_t ib = 0; ib < 2; ++ib)
        for (std::size_t jb = 0; jb < 4; ++jb)
          CHECK(k(ia * 2 + ib, ja * 4 + jb) == a(ia, ja) * b(ib, jb));
}

TEST_CASE("kron associativity (integer entries, exact)") {
  // Entry products of small integers are exact in floating point, so the two
  // nesting orders must agree bitwise; the library's canonical order for
  // nested products is left-associated.
  std::mt19937 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    const ComplexMatrix a = random_integer_matrix(rng, 2, 3);
    const ComplexMatrix b = random_integer_matrix(rng, 3, 2);
    const ComplexMatrix c = random_integer_matrix(rng, 2, 2);
    CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
  }
}

TEST_CASE("trace cyclicity") {
  std::mt19937 rng(13);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix a = random_matrix(rng, 4, 6);
    const ComplexMatrix b = random_matrix(rng, 6, 4);
    const cplx t1 = (a * b).trace();
    const cplx t2 = (b * a).trace();
    CHECK(std::abs(t1 - t2) < 1e-10);
  }
}

TEST_CASE("matrix_sqrt_psd on diagonal cases") {
  CHECK(max_abs_diff(matrix_sqrt_psd(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)) <
        1e-12);
  const ComplexMatrix d(2, 2, {4.0, 0.0, 0.0, 9.0});
  const ComplexMatrix expect(2, 2, {2.0, 0.0, 0.0, 3.0});
  CHECK(max_abs_diff(matrix_sqrt_psd(d), expect) < 1e-12);
}

TEST_CASE("matrix_sqrt_psd round trip on random PSD matrices") {
  std::mt19937 rng(101);
  for (std::size_t n : {2u, 3u, 6u, 10u}) {
    const ComplexMatrix m = random_psd(rng, n);
    const ComplexMatrix s = matrix_sqrt_psd(m);
    CHECK(s.is_hermitian(1e-10));
    CHECK(max_abs_diff(s * s, m) < 1e-9 * std::max(m.max_abs(), 1.0));
    const EigenDecomposition eig = hermitian_eig(s);
    CHECK(eig.eigenvalues.front() >= -1e-10);
  }
}

TEST_CASE("matrix_sqrt_psd rejects indefinite matrices") {
  const ComplexMatrix m(2, 2, {1.0, 0.0, 0.0, -1.0});
  CHECK_THROWS_AS(matrix_sqrt_psd(m), std::invalid_argument);
}

TEST_CASE("basic matrix plumbing") {
  ComplexMatrix m(2, 2, {cplx(1, 2), cplx(3, -1), cplx(0, 1), cplx(-2, 0)});
  const ComplexMatrix md = m.adjoint();
  CHECK(md(0, 1) == std::conj(m(1, 0)));
  CHECK(m.trace() == cplx(-1, 2));
  CHECK(m.max_abs() == doctest::Approx(std::sqrt(10.0)));
  CHECK_THROWS_AS(ComplexMatrix(2, 3).trace(), std::invalid_argument);
  CHECK_THROWS_AS(inner(ComplexMatrix(2, 1), ComplexMatrix(3, 1)), std::invalid_argument);
}
