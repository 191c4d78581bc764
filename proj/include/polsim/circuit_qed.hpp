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

#include <array>
#include <vector>

#include "polsim/linalg.hpp"

namespace polsim {

/// Driven transmon-cavity parameters. All frequencies and rates are angular
/// (rad/ns); conversion from the nu = omega/2pi values used in config files
/// happens at the I/O boundary only.
struct SystemParams {
  double omega_q = kTwoPi * 5.0;        ///< qubit frequency
  double omega_r = kTwoPi * 10.0;       ///< cavity frequency
  double omega_d = kTwoPi * 4.9;        ///< classical drive frequency
  double g = kTwoPi * 0.5;              ///< qubit-cavity coupling
  double omega_drive = kTwoPi * 0.030;  ///< classical drive strength Omega_d
  double kappa = kTwoPi * 3.0e-3;       ///< cavity decay
  double gamma_q = kTwoPi * 0.2e-3;     ///< qubit decay
  int n_max = 10;                       ///< cavity Fock truncation (>= 4)

  /// Cavity-qubit detuning, omega_r - omega_q.
  double detuning() const { return omega_r - omega_q; }
  /// Dispersive shift chi = g^2 / detuning (0 if the detuning vanishes).
  double chi() const { return detuning() == 0.0 ? 0.0 : g * g / detuning(); }
  /// g / |detuning|; the dispersive approximation degrades above ~0.2.
  double dispersive_ratio() const;
  int hilbert_dim() const { return 2 * (n_max + 1); }

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const;
};

/// Cavity annihilation operator on the (n_max+1)-dim Fock space.
ComplexMatrix cavity_annihilation(int n_max);
/// Full-space a^dagger; tensor order qubit (x) cavity, index = q*(n_max+1)+n,
/// qubit index 0 = |g>.
ComplexMatrix cavity_raising_full(int n_max);
/// Full-space sigma_+ = |e><g| (x) I_cavity.
ComplexMatrix qubit_raising_full(int n_max);

/// Rotating-frame Hamiltonian (hbar = 1):
///   (omega_q-omega_d)/2 sigma_z + (omega_r-omega_d)(a^dag a + 1/2)
///   + g(a^dag sigma_- + a sigma_+) + Omega_d(sigma_- + sigma_+),
/// dimension 2(n_max+1), tensor order as documented above.
ComplexMatrix build_hrwa(const SystemParams& p);

/// Undriven Jaynes-Cummings dressed pair of the n-th excitation manifold,
/// spanned by {|e,n>, |g,n+1>}. `theta` is the mixing angle on the principal
/// branch, tan(theta) = -2g sqrt(n+1)/detuning. States are embedded in the
/// full Hilbert space and paired with their energies: the +/- labels follow
/// the energy ordering E_plus/minus = (omega_r-omega_d)(n+1) +/- R/2,
/// R = sqrt(detuning^2 + 4g^2(n+1)).
struct DressedStates {
  ComplexMatrix plus;
  ComplexMatrix minus;
  double energy_plus = 0.0;
  double energy_minus = 0.0;
  double theta = 0.0;
};
DressedStates dressed_state_analytic(const SystemParams& p, int n);

/// Doubly-dressed polariton eigenbasis of build_hrwa. The four lowest states
/// carry labels |1>..|4>; `nesting_ok` records whether the drive frequency
/// sits inside the window omega_q - 3 chi < omega_d < omega_q - chi.
struct PolaritonBasis {
  std::size_t hilbert_dim = 0;
  std::vector<double> eigenvalues;  ///< ascending, rad/ns
  ComplexMatrix eigenvectors;       ///< unit columns
  std::array<int, 4> nested_labels{{0, 1, 2, 3}};
  double chi = 0.0;
  double window_low = 0.0;   ///< omega_q - 3 chi
  double window_high = 0.0;  ///< omega_q - chi
  bool nesting_ok = false;
  double dispersive_ratio = 0.0;
};
PolaritonBasis polariton_basis(const SystemParams& p);

/// Lambda-system constants over the nested four-level subspace (labels 1..4
/// map to indices 0..3):
///   C(i,j) = |<i|a^dag|j>|, Q(i,j) = |<i|sigma_+|j>|,
///   gamma(i,j) = kappa C^2 + gamma_q Q^2,
///   omega_trans(i,j) = E_i - E_j (rotating-frame eigenvalue difference).
struct TransitionTable {
  std::array<std::array<double, 4>, 4> C{};
  std::array<std::array<double, 4>, 4> Q{};
  std::array<std::array<double, 4>, 4> gamma{};        ///< rad/ns
  std::array<std::array<double, 4>, 4> omega_trans{};  ///< rad/ns
};
/// Refuses to run on a basis with nesting_ok == false.
TransitionTable transition_table(const SystemParams& p, const PolaritonBasis& b);

}  // namespace polsim
