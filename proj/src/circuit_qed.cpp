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

#include "polsim/circuit_qed.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace polsim {

namespace {

// Qubit operators in the (|g>, |e>) basis: sigma_z|g> = -|g>, sigma_z|e> = +|e>.
ComplexMatrix sigma_z2() { return ComplexMatrix(2, 2, {-1.0, 0.0, 0.0, 1.0}); }
ComplexMatrix sigma_minus2() { return ComplexMatrix(2, 2, {0.0, 1.0, 0.0, 0.0}); }
ComplexMatrix sigma_plus2() { return ComplexMatrix(2, 2, {0.0, 0.0, 1.0, 0.0}); }

}  // namespace

double SystemParams::dispersive_ratio() const {
  const double d = std::abs(detuning());
  return d == 0.0 ? std::numeric_limits<double>::infinity() : g / d;
}

void SystemParams::validate() const {
  if (!(omega_q > 0.0)) throw std::invalid_argument("SystemParams: omega_q must be > 0");
  if (!(omega_r > 0.0)) throw std::invalid_argument("SystemParams: omega_r must be > 0");
  if (!(omega_d > 0.0)) throw std::invalid_argument("SystemParams: omega_d must be > 0");
  if (g < 0.0) throw std::invalid_argument("SystemParams: g must be >= 0");
  if (omega_drive < 0.0) throw std::invalid_argument("SystemParams: omega_drive must be >= 0");
  if (kappa < 0.0) throw std::invalid_argument("SystemParams: kappa must be >= 0");
  if (gamma_q < 0.0) throw std::invalid_argument("SystemParams: gamma_q must be >= 0");
  if (n_max < 4)
    throw std::invalid_argument("SystemParams: Fock truncation n_max=" + std::to_string(n_max) +
                                " is too small (need n_max >= 4)");
}

ComplexMatrix cavity_annihilation(int n_max) {
  const std::size_t nc = static_cast<std::size_t>(n_max) + 1;
  ComplexMatrix a(nc, nc);
  for (std::size_t n = 1; n < nc; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix cavity_raising_full(int n_max) {
  return kron(ComplexMatrix::identity(2), cavity_annihilation(n_max).adjoint());
}

ComplexMatrix qubit_raising_full(int n_max) {
  return kron(sigma_plus2(), ComplexMatrix::identity(static_cast<std::size_t>(n_max) + 1));
}

ComplexMatrix build_hrwa(const SystemParams& p) {
  p.validate();
  const std::size_t nc = static_cast<std::size_t>(p.n_max) + 1;
  const ComplexMatrix iq = ComplexMatrix::identity(2);
  const ComplexMatrix ic = ComplexMatrix::identity(nc);
  const ComplexMatrix a = cavity_annihilation(p.n_max);
  const ComplexMatrix ad = a.adjoint();
  const double wq_rot = p.omega_q - p.omega_d;
  const double wr_rot = p.omega_r - p.omega_d;

  ComplexMatrix number_term = ad * a;
  number_term += ComplexMatrix::identity(nc) * cplx(0.5);

  ComplexMatrix h = kron(sigma_z2(), ic) * cplx(0.5 * wq_rot);
  h += kron(iq, number_term) * cplx(wr_rot);
  h += (kron(sigma_minus2(), ad) + kron(sigma_plus2(), a)) * cplx(p.g);
  h += kron(sigma_minus2() + sigma_plus2(), ic) * cplx(p.omega_drive);
  return h;
}

DressedStates dressed_state_analytic(const SystemParams& p, int n) {
  p.validate();
  if (n < 0) throw std::invalid_argument("dressed_state_analytic: n must be >= 0");
  if (n + 1 > p.n_max)
    throw std::invalid_argument("dressed_state_analytic: manifold n=" + std::to_string(n) +
                                " needs n+1 <= n_max=" + std::to_string(p.n_max));

  const double det = p.detuning();
  const double gn = 2.0 * p.g * std::sqrt(static_cast<double>(n) + 1.0);
  const double rabi = std::sqrt(det * det + gn * gn);
  const double wr_rot = p.omega_r - p.omega_d;

  DressedStates out;
  out.theta = (det == 0.0) ? (gn == 0.0 ? 0.0 : -0.5 * M_PI) : std::atan(-gn / det);
  // The principal-branch theta fixes the reported mixing angle; the pairing of
  // states with E_plus/E_minus uses the atan2 branch alpha in [0, pi], which
  // keeps |+,n> attached to the upper energy for either sign of the detuning
  // (alpha = theta mod pi).
  const double alpha = std::atan2(gn, -det);
  const double ca = std::cos(0.5 * alpha);
  const double sa = std::sin(0.5 * alpha);

  const std::size_t nc = static_cast<std::size_t>(p.n_max) + 1;
  const std::size_t idx_en = 1 * nc + static_cast<std::size_t>(n);      // |e,n>
  const std::size_t idx_gn1 = 0 * nc + static_cast<std::size_t>(n) + 1; // |g,n+1>
  out.plus = ComplexMatrix(2 * nc, 1);
  out.minus = ComplexMatrix(2 * nc, 1);
  out.plus(idx_en, 0) = ca;
  out.plus(idx_gn1, 0) = sa;
  out.minus(idx_en, 0) = -sa;
  out.minus(idx_gn1, 0) = ca;
  out.energy_plus = wr_rot * (n + 1.0) + 0.5 * rabi;
  out.energy_minus = wr_rot * (n + 1.0) - 0.5 * rabi;
  return out;
}

PolaritonBasis polariton_basis(const SystemParams& p) {
  const ComplexMatrix h = build_hrwa(p);
  EigenDecomposition eig = hermitian_eig(h);

  PolaritonBasis b;
  b.hilbert_dim = h.rows();
  b.eigenvalues = std::move(eig.eigenvalues);
  b.eigenvectors = std::move(eig.eigenvectors);
  b.nested_labels = {0, 1, 2, 3};
  b.dispersive_ratio = p.dispersive_ratio();
  if (p.detuning() == 0.0) {
    b.chi = 0.0;
    b.window_low = p.omega_q;
    b.window_high = p.omega_q;
    b.nesting_ok = false;
    return b;
  }
  b.chi = p.chi();
  b.window_low = p.omega_q - 3.0 * b.chi;
  b.window_high = p.omega_q - b.chi;
  b.nesting_ok = (b.window_low < p.omega_d) && (p.omega_d < b.window_high);
  return b;
}

TransitionTable transition_table(const SystemParams& p, const PolaritonBasis& b) {
  if (!b.nesting_ok)
    throw std::invalid_argument(
        "transition_table: basis is not nested (omega_d outside the window "
        "omega_q-3chi < omega_d < omega_q-chi); refusing to extract the Lambda system");
  if (b.hilbert_dim != static_cast<std::size_t>(p.hilbert_dim()))
    throw std::invalid_argument("transition_table: basis dimension does not match SystemParams");

  const ComplexMatrix ad_full = cavity_raising_full(p.n_max);
  const ComplexMatrix sp_full = qubit_raising_full(p.n_max);

  TransitionTable t;
  std::array<ComplexMatrix, 4> states;
  for (int i = 0; i < 4; ++i) states[i] = b.eigenvectors.col(b.nested_labels[i]);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      t.C[i][j] = std::abs(inner(states[i], ad_full * states[j]));
      t.Q[i][j] = std::abs(inner(states[i], sp_full * states[j]));
      t.gamma[i][j] = p.kappa * t.C[i][j] * t.C[i][j] + p.gamma_q * t.Q[i][j] * t.Q[i][j];
      t.omega_trans[i][j] =
          b.eigenvalues[b.nested_labels[i]] - b.eigenvalues[b.nested_labels[j]];
    }
  }
  return t;
}

}  // namespace polsim
