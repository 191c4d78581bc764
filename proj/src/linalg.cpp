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

#include "polsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace polsim {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<cplx> entries)
    : rows_(rows), cols_(cols), data_(entries) {
  if (data_.size() != rows * cols)
    throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::column(std::initializer_list<cplx> entries) {
  ComplexMatrix m(entries.size(), 1);
  std::copy(entries.begin(), entries.end(), m.data_.begin());
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::hermitized() const {
  if (!is_square()) throw std::invalid_argument("hermitized: matrix is not square");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix is not square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::is_hermitian(double rel_tol) const {
  if (!is_square()) return false;
  const double scale = max_abs();
  if (scale == 0.0) return true;
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst <= rel_tol * scale;
}

ComplexMatrix ComplexMatrix::col(std::size_t j) const {
  ComplexMatrix out(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, j);
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix add: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix sub: dimension mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix mul: dimension mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

cplx inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != 1 || b.cols() != 1 || a.rows() != b.rows())
    throw std::invalid_argument("inner: arguments must be columns of equal length");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) s += std::conj(a(i, 0)) * b(i, 0);
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const cplx aij = a(ia, ja);
      if (aij == cplx(0.0, 0.0)) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          out(ia * b.rows() + ib, ja * b.cols() + jb) = aij * b(ib, jb);
    }
  return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

// Fix the global phase: largest-magnitude component becomes real positive.
// Ties in magnitude resolve to the lowest index.
void fix_column_phase(ComplexMatrix& v, std::size_t j) {
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const double m = std::abs(v(i, j));
    if (m > best_mag) {
      best_mag = m;
      best = i;
    }
  }
  if (best_mag <= 0.0) return;
  const cplx phase = std::conj(v(best, j)) / best_mag;
  for (std::size_t i = 0; i < v.rows(); ++i) v(i, j) *= phase;
}

std::size_t argmax_abs(const ComplexMatrix& v, std::size_t j) {
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const double m = std::abs(v(i, j));
    if (m > best_mag) {
      best_mag = m;
      best = i;
    }
  }
  return best;
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  if (!m.is_square())
    throw std::invalid_argument("hermitian_eig: matrix is not square (" +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")");
  if (!m.is_hermitian())
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian within 1e-12*max|M|");

  const std::size_t n = m.rows();
  ComplexMatrix a = m.hermitized();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(a.max_abs(), 1e-300);
  const double stop = 1e-14 * scale * static_cast<double>(n);

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-18 * scale) continue;
        const cplx u = apq / r;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double sgn = tau >= 0.0 ? 1.0 : -1.0;
        const double t = sgn / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // A <- J^dag A J, V <- V J with the complex Givens rotation
        // J(p,p)=u*c, J(p,q)=u*s, J(q,p)=-s, J(q,q)=c on the (p,q) plane.
        const cplx uc = u * c, us = u * s;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * uc - akq * s;
          a(k, q) = akp * us + akq * c;
        }
        const cplx cu = std::conj(u);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = cu * c * apk - s * aqk;
          a(q, k) = cu * s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * uc - vkq * s;
          v(k, q) = vkp * us + vkq * c;
        }
      }
    }
  }
  if (off_diagonal_norm(a) > stop)
    throw std::runtime_error("hermitian_eig: Jacobi iteration failed to converge");

  // Ascending eigenvalue order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }

  // Degenerate blocks: re-orthonormalize (modified Gram-Schmidt) and order the
  // block members by the index of their largest-magnitude component so that
  // the output is reproducible run-to-run.
  double lam_scale = 1.0;
  for (double lam : out.eigenvalues) lam_scale = std::max(lam_scale, std::abs(lam));
  const double deg_tol = 1e-12 * lam_scale;
  std::size_t b0 = 0;
  while (b0 < n) {
    std::size_t b1 = b0 + 1;
    while (b1 < n && out.eigenvalues[b1] - out.eigenvalues[b1 - 1] <= deg_tol) ++b1;
    if (b1 - b0 > 1) {
      for (std::size_t j = b0; j < b1; ++j) {
        for (std::size_t k = b0; k < j; ++k) {
          cplx proj = 0.0;
          for (std::size_t i = 0; i < n; ++i)
            proj += std::conj(out.eigenvectors(i, k)) * out.eigenvectors(i, j);
          for (std::size_t i = 0; i < n; ++i)
            out.eigenvectors(i, j) -= proj * out.eigenvectors(i, k);
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < n; ++i) nrm += std::norm(out.eigenvectors(i, j));
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) /= nrm;
      }
      std::vector<std::size_t> blk(b1 - b0);
      std::iota(blk.begin(), blk.end(), b0);
      std::stable_sort(blk.begin(), blk.end(), [&out](std::size_t i, std::size_t j) {
        return argmax_abs(out.eigenvectors, i) < argmax_abs(out.eigenvectors, j);
      });
      ComplexMatrix tmp(n, b1 - b0);
      for (std::size_t j = 0; j < blk.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) tmp(i, j) = out.eigenvectors(i, blk[j]);
      for (std::size_t j = 0; j < blk.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, b0 + j) = tmp(i, j);
    }
    b0 = b1;
  }
  for (std::size_t j = 0; j < n; ++j) fix_column_phase(out.eigenvectors, j);
  return out;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  EigenDecomposition eig = hermitian_eig(m);
  const std::size_t n = m.rows();
  if (!eig.eigenvalues.empty() && eig.eigenvalues.front() < -1e-10)
    throw std::invalid_argument("matrix_sqrt_psd: matrix is not PSD (min eigenvalue " +
                                std::to_string(eig.eigenvalues.front()) + ")");
  ComplexMatrix s(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = std::max(eig.eigenvalues[k], 0.0);
    const double root = std::sqrt(lam);
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        s(i, j) += root * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
  }
  return s.hermitized();
}

}  // namespace polsim
