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

#include "polsim/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polsim {

void validate_density_matrix(const DensityMatrix& rho, const char* context) {
  const std::string where(context);
  if (!rho.is_square() || rho.rows() != 3)
    throw std::invalid_argument(where + ": density matrix must be 3x3");
  if (!rho.is_hermitian(1e-10))
    throw std::invalid_argument(where + ": density matrix is not Hermitian within 1e-10");
  if (std::abs(rho.trace() - cplx(1.0)) > 1e-8)
    throw std::invalid_argument(where + ": density matrix trace differs from 1 by more than 1e-8");
  const EigenDecomposition eig = hermitian_eig(rho.hermitized());
  if (eig.eigenvalues.front() < -1e-9)
    throw std::invalid_argument(where + ": density matrix has eigenvalue below -1e-9 (" +
                                std::to_string(eig.eigenvalues.front()) + ")");
}

DensityMatrix pure_state_density(int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("pure_state_density: index must be 0..2");
  DensityMatrix rho(3, 3);
  rho(k, k) = 1.0;
  return rho;
}

LindbladModel make_lambda_model(std::function<ComplexMatrix(double)> hamiltonian,
                                double gamma_31, double gamma_32, double gamma_21) {
  if (gamma_31 < 0.0 || gamma_32 < 0.0 || gamma_21 < 0.0)
    throw std::invalid_argument("make_lambda_model: decay rates must be >= 0");
  LindbladModel m;
  m.hamiltonian = std::move(hamiltonian);
  ComplexMatrix o1(3, 3), o2(3, 3), o3(3, 3);
  o1(0, 2) = std::sqrt(gamma_31);  // |1><3|
  o2(1, 2) = std::sqrt(gamma_32);  // |2><3|
  o3(0, 1) = std::sqrt(gamma_21);  // |1><2|
  m.jump_ops = {o1, o2, o3};
  return m;
}

ComplexMatrix dissipator(const ComplexMatrix& op, const DensityMatrix& rho) {
  const ComplexMatrix od = op.adjoint();
  const ComplexMatrix odo = od * op;
  ComplexMatrix out = op * rho * od;
  out *= 2.0;
  out -= rho * odo;
  out -= odo * rho;
  out *= 0.5;
  return out;
}

ComplexMatrix lindblad_rhs(const LindbladModel& m, double t, const DensityMatrix& rho) {
  const ComplexMatrix h = m.hamiltonian(t);
  ComplexMatrix out = (h * rho - rho * h) * cplx(0.0, -1.0);
  for (const ComplexMatrix& op : m.jump_ops) out += dissipator(op, rho);
  return out;
}

void IntegratorConfig::validate() const {
  if (!(t0 < tf)) throw std::invalid_argument("IntegratorConfig: t0 must be < tf");
  if (!(dt > 0.0)) throw std::invalid_argument("IntegratorConfig: dt must be > 0");
  if (dt > (tf - t0) / 100.0)
    throw std::invalid_argument("IntegratorConfig: dt must be <= (tf-t0)/100");
}

namespace {

struct JumpCache {
  ComplexMatrix op;
  ComplexMatrix op_dag;
  ComplexMatrix op_dag_op;
};

ComplexMatrix rhs_cached(const LindbladModel& m, const std::vector<JumpCache>& jumps, double t,
                         const ComplexMatrix& rho) {
  const ComplexMatrix h = m.hamiltonian(t);
  ComplexMatrix out = (h * rho - rho * h) * cplx(0.0, -1.0);
  for (const JumpCache& j : jumps) {
    out += j.op * rho * j.op_dag;
    ComplexMatrix anti = j.op_dag_op * rho + rho * j.op_dag_op;
    anti *= 0.5;
    out -= anti;
  }
  return out;
}

template <typename Rhs, typename State>
State rk4_step(const Rhs& rhs, double t, double dt, const State& y) {
  const State k1 = rhs(t, y);
  const State k2 = rhs(t + 0.5 * dt, y + k1 * cplx(0.5 * dt));
  const State k3 = rhs(t + 0.5 * dt, y + k2 * cplx(0.5 * dt));
  const State k4 = rhs(t + dt, y + k3 * cplx(dt));
  State out = y;
  out += (k1 + k4) * cplx(dt / 6.0);
  out += (k2 + k3) * cplx(dt / 3.0);
  return out;
}

std::size_t grid_steps(const IntegratorConfig& cfg) {
  const double span = cfg.tf - cfg.t0;
  return static_cast<std::size_t>(std::ceil(span / cfg.dt - 1e-9));
}

}  // namespace

EvolutionResult integrate(const LindbladModel& m, const IntegratorConfig& cfg,
                          const DensityMatrix& rho0) {
  cfg.validate();
  validate_density_matrix(rho0, "integrate");
  if (!m.hamiltonian) throw std::invalid_argument("integrate: model has no Hamiltonian");
  for (const ComplexMatrix& op : m.jump_ops)
    if (op.rows() != 3 || op.cols() != 3)
      throw std::invalid_argument("integrate: jump operators must be 3x3");

  std::vector<JumpCache> jumps;
  jumps.reserve(m.jump_ops.size());
  for (const ComplexMatrix& op : m.jump_ops)
    jumps.push_back({op, op.adjoint(), op.adjoint() * op});
  const auto rhs = [&m, &jumps](double t, const ComplexMatrix& rho) {
    return rhs_cached(m, jumps, t, rho);
  };

  const std::size_t n_steps = grid_steps(cfg);
  EvolutionResult res;
  res.times.reserve(n_steps + 1);
  res.populations.reserve(n_steps + 1);
  if (cfg.store_states) res.states.reserve(n_steps + 1);

  DensityMatrix rho = rho0.hermitized();
  double peak_value = -1.0;

  const auto record = [&](double t) {
    res.times.push_back(t);
    std::array<double, 3> pops{rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real()};
    res.populations.push_back(pops);
    if (cfg.store_states) res.states.push_back(rho);
    for (int i = 0; i < 3; ++i)
      res.summary.max_populations[i] = std::max(res.summary.max_populations[i], pops[i]);
    const double drift = std::abs(pops[0] + pops[1] + pops[2] - 1.0);
    res.summary.max_trace_drift = std::max(res.summary.max_trace_drift, drift);
    const EigenDecomposition eig = hermitian_eig(rho);
    res.summary.min_eigenvalue = std::min(res.summary.min_eigenvalue, eig.eigenvalues.front());
    if (cfg.track_peak_of >= 0 && pops[static_cast<std::size_t>(cfg.track_peak_of)] > peak_value) {
      peak_value = pops[static_cast<std::size_t>(cfg.track_peak_of)];
      res.rho_peak = rho;
      res.summary.t_peak = t;
    }
    if (res.summary.max_trace_drift > 1e-6 || eig.eigenvalues.front() < -1e-6)
      throw IntegratorDivergedError(
          "integrate: diverged at t=" + std::to_string(t) + " ns (trace drift " +
              std::to_string(res.summary.max_trace_drift) + ", min eigenvalue " +
              std::to_string(eig.eigenvalues.front()) + "); reduce dt",
          t, res.summary.max_trace_drift, eig.eigenvalues.front());
  };

  res.summary.min_eigenvalue = 1.0;
  record(cfg.t0);
  double t = cfg.t0;
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double t_next = (k + 1 == n_steps) ? cfg.tf : cfg.t0 + (k + 1) * cfg.dt;
    rho = rk4_step(rhs, t, t_next - t, rho);
    rho = rho.hermitized();
    t = t_next;
    record(t);
  }

  res.rho_final = rho;
  if (cfg.track_peak_of < 0) {
    res.rho_peak = rho;
    res.summary.t_peak = t;
  }
  res.summary.final_populations = res.populations.back();
  return res;
}

SchrodingerResult schrodinger_evolve(const std::function<ComplexMatrix(double)>& hamiltonian,
                                     const IntegratorConfig& cfg, const ComplexMatrix& psi0) {
  cfg.validate();
  if (!hamiltonian) throw std::invalid_argument("schrodinger_evolve: no Hamiltonian");
  if (psi0.cols() != 1) throw std::invalid_argument("schrodinger_evolve: psi0 must be a column");

  const auto rhs = [&hamiltonian](double t, const ComplexMatrix& psi) {
    return hamiltonian(t) * psi * cplx(0.0, -1.0);
  };
  const std::size_t n_steps = grid_steps(cfg);
  SchrodingerResult res;
  res.times.reserve(n_steps + 1);
  res.states.reserve(n_steps + 1);
  ComplexMatrix psi = psi0;
  res.times.push_back(cfg.t0);
  res.states.push_back(psi);
  double t = cfg.t0;
  for (std::size_t k = 0; k < n_steps; ++k) {
    const double t_next = (k + 1 == n_steps) ? cfg.tf : cfg.t0 + (k + 1) * cfg.dt;
    psi = rk4_step(rhs, t, t_next - t, psi);
    t = t_next;
    res.times.push_back(t);
    res.states.push_back(psi);
  }
  return res;
}

double fidelity(const DensityMatrix& rho_f, const DensityMatrix& rho_t,
                FidelityConvention convention) {
  validate_density_matrix(rho_f, "fidelity(rho_f)");
  validate_density_matrix(rho_t, "fidelity(rho_t)");
  const ComplexMatrix root_t = matrix_sqrt_psd(rho_t.hermitized());
  const ComplexMatrix inner_m = (root_t * rho_f.hermitized() * root_t).hermitized();
  const EigenDecomposition eig = hermitian_eig(inner_m);
  double tr = 0.0;
  for (double lam : eig.eigenvalues) tr += std::sqrt(std::max(lam, 0.0));
  const double f_sq = std::clamp(tr * tr, 0.0, 1.0);
  return convention == FidelityConvention::squared ? f_sq : std::sqrt(f_sq);
}

}  // namespace polsim
