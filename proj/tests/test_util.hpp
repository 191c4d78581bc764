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

#include <random>

#include "polsim/linalg.hpp"

namespace polsim::testing {

inline ComplexMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = cplx(dist(rng), dist(rng));
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937& rng, std::size_t n) {
  return random_matrix(rng, n, n).hermitized();
}

/// Random matrix with small-integer entries; products of such entries are
/// exact in double precision.
inline ComplexMatrix random_integer_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> dist(-3, 3);
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = cplx(static_cast<double>(dist(rng)), static_cast<double>(dist(rng)));
  return m;
}

inline ComplexMatrix random_psd(std::mt19937& rng, std::size_t n) {
  const ComplexMatrix a = random_matrix(rng, n, n);
  return (a * a.adjoint()).hermitized();
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix d = a;
  d -= b;
  return d.max_abs();
}

}  // namespace polsim::testing
