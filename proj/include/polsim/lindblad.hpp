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
#include <functional>
#include <stdexcept>
#include <vector>

#include "polsim/linalg.hpp"

namespace polsim {

/// Density matrices are plain 3x3 ComplexMatrix values; validation happens at
/// API boundaries.
using DensityMatrix = ComplexMatrix;

/// Unit-trace (1e-8), Hermitian (1e-10), PSD (eigenvalues >= -1e-9) check.
/// Throws std::invalid_argument naming the violated property.
void validate_density_matrix(const DensityMatrix& rho, const char* context);

/// |k><k| on a 3-level system.
DensityMatrix pure_state_density(int k);

/// Time-dependent master-equation model for the 3-level system: a Hamiltonian
/// H(t) plus jump operators that already include their sqrt(rate) prefactor.
struct LindbladModel {
  std::function<ComplexMatrix(double)> hamiltonian;
  std::vector<ComplexMatrix> jump_ops;
};

/// Model with the three radiative channels of the Lambda system:
///   O1 = sqrt(gamma_31)|1><3|, O2 = sqrt(gamma_32)|2><3|, O3 = sqrt(gamma_21)|1><2|.
/// Rates in rad/ns, all >= 0.
LindbladModel make_lambda_model(std::function<ComplexMatrix(double)> hamiltonian,
                                double gamma_31, double gamma_32, double gamma_21);

/// Lindblad superoperator action (2 O rho O^dag - rho O^dag O - O^dag O rho)/2.
ComplexMatrix dissipator(const ComplexMatrix& op, const DensityMatrix& rho);

/// drho/dt = -i[H(t), rho] + sum_j dissipator(O_j, rho)  (hbar = 1).
ComplexMatrix lindblad_rhs(const LindbladModel& m, double t, const DensityMatrix& rho);

/// Fixed-step RK4 configuration. The grid is t0 + k*dt with a final short step
/// landing exactly on tf; dt must resolve the window (dt <= (tf-t0)/100).
struct IntegratorConfig {
  double t0 = -100.0;
  double tf = 100.0;
  double dt = 0.01;
  bool store_states = false;
  /// When >= 0, keep a copy of rho at the running maximum of this population.
  int track_peak_of = -1;

  void validate() const;
};

/// Raised when the fixed-step integration left the physical manifold
/// (trace drift > 1e-6 or an eigenvalue below -1e-6).
class IntegratorDivergedError : public std::runtime_error {
 public:
  IntegratorDivergedError(std::string msg, double t, double trace_drift, double min_eigenvalue)
      : std::runtime_error(std::move(msg)),
        t(t),
        trace_drift(trace_drift),
        min_eigenvalue(min_eigenvalue) {}
  double t;
  double trace_drift;
  double min_eigenvalue;
};

struct EvolutionSummary {
  std::array<double, 3> final_populations{};
  std::array<double, 3> max_populations{};
  double t_peak = 0.0;  ///< time of the tracked population's maximum
  double max_trace_drift = 0.0;
  double min_eigenvalue = 0.0;
  // Filled by the protocol layer (target |2><2|); NaN until then.
  double fidelity_sq_final = 0.0;
  double fidelity_unsq_final = 0.0;
  double fidelity_sq_peak = 0.0;
  double fidelity_unsq_peak = 0.0;
  double gamma_31 = 0.0;  ///< rates actually used, rad/ns
  double gamma_32 = 0.0;
  double gamma_21 = 0.0;
};

struct EvolutionResult {
  std::vector<double> times;
  std::vector<std::array<double, 3>> populations;  ///< (P1,P2,P3) per grid point
  std::vector<double> fidelity_trace;              ///< filled by the protocol layer
  std::vector<DensityMatrix> states;               ///< only if store_states
  DensityMatrix rho_final;
  DensityMatrix rho_peak;  ///< state at t_peak (== rho_final if not tracking)
  EvolutionSummary summary;
};

/// Integrates the master equation with fixed-step RK4. After every step rho is
/// re-Hermitized ((rho+rho^dag)/2); the trace is never renormalized, its drift
/// is recorded as a diagnostic. Throws IntegratorDivergedError when the drift
/// or negativity bounds are exceeded (advice: reduce dt).
EvolutionResult integrate(const LindbladModel& m, const IntegratorConfig& cfg,
                          const DensityMatrix& rho0);

/// Fixed-step RK4 for the Schrodinger equation dpsi/dt = -i H(t) psi on the
/// same time grid as integrate(); returns the state at every grid point.
struct SchrodingerResult {
  std::vector<double> times;
  std::vector<ComplexMatrix> states;  ///< 3x1 columns
};
SchrodingerResult schrodinger_evolve(const std::function<ComplexMatrix(double)>& hamiltonian,
                                     const IntegratorConfig& cfg, const ComplexMatrix& psi0);

enum class FidelityConvention { squared, unsquared };

/// Uhlmann fidelity between rho_f and target rho_t:
///   squared:   (Tr sqrt(sqrt(rho_t) rho_f sqrt(rho_t)))^2
///   unsquared: its square root.
/// For a pure target |k><k| the squared convention reduces to <k|rho_f|k>.
double fidelity(const DensityMatrix& rho_f, const DensityMatrix& rho_t,
                FidelityConvention convention);

}  // namespace polsim
