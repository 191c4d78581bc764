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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace polsim {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Dense complex matrix, row-major. Small dimensions only (<= ~64); all
/// operations are plain O(n^3) loops and return by value.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  /// n x 1 column vector from entries.
  static ComplexMatrix column(std::initializer_list<cplx> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<cplx>& data() const { return data_; }
  std::vector<cplx>& data() { return data_; }

  ComplexMatrix adjoint() const;
  /// (M + M^dagger)/2; requires a square matrix.
  ComplexMatrix hermitized() const;
  cplx trace() const;
  double max_abs() const;
  /// max |M - M^dagger| <= tol * max|M| (an all-zero matrix counts as Hermitian).
  bool is_hermitian(double rel_tol = 1e-12) const;
  /// Column j as an n x 1 matrix.
  ComplexMatrix col(std::size_t j) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix lhs, cplx s) { return lhs *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix rhs) { return rhs *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// <a|b> for column vectors (conjugates the left argument).
cplx inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigensystem of a Hermitian matrix. Eigenvalues ascending; eigenvectors are
/// the orthonormal columns of `eigenvectors`, one per eigenvalue, with the
/// phase fixed so that the largest-magnitude component of each column is real
/// and positive.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Cyclic complex Jacobi diagonalization. Deterministic: identical input gives
/// bit-identical output. Degenerate eigenvalues are re-orthonormalized within
/// their block and ordered by the index of the largest-magnitude component.
/// Throws std::invalid_argument for non-square or non-Hermitian input.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

/// Kronecker product: block (i,j) of the result equals A(i,j)*B. Nested
/// products are built left-associated, (A kron B) kron C.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Principal square root S of a Hermitian PSD matrix, S*S = M. Eigenvalues in
/// [-1e-10, 0) are clamped to zero; below -1e-10 is a not-PSD error.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

}  // namespace polsim
