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

#include "polsim/pulses.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace polsim {

namespace {
constexpr double kAmplitudeFloor = 1e-12;  // rad/ns
}

void PulseSchedule::validate() const {
  if (!(sigma > 0.0)) throw std::invalid_argument("PulseSchedule: sigma must be > 0");
  if (omega_p < 0.0) throw std::invalid_argument("PulseSchedule: omega_p must be >= 0");
  if (omega_s < 0.0) throw std::invalid_argument("PulseSchedule: omega_s must be >= 0");
}

void DriveConfig::validate() const {
  if (cd_scale < 0.0) throw std::invalid_argument("DriveConfig: cd_scale must be >= 0");
}

Envelopes envelopes(double t, const PulseSchedule& s) {
  s.validate();
  const double inv2s2 = 1.0 / (2.0 * s.sigma * s.sigma);
  Envelopes e;
  e.pump = s.omega_p * std::exp(-t * t * inv2s2);
  e.stokes = s.omega_s * std::exp(-(t - s.t_s) * (t - s.t_s) * inv2s2);
  return e;
}

MixingAngle mixing_angle(double t, const PulseSchedule& s) {
  s.validate();
  const bool pump_on = s.omega_p > kAmplitudeFloor;
  const bool stokes_on = s.omega_s > kAmplitudeFloor;
  if (!pump_on && !stokes_on)
    throw std::invalid_argument(
        "mixing_angle: both envelopes below the 1e-12 rad/ns floor; angle undefined");

  MixingAngle m;
  if (!pump_on) {  // ratio identically 0
    m.theta = 0.0;
    m.theta_dot = 0.0;
    return m;
  }
  if (!stokes_on) {  // ratio identically infinite
    m.theta = 0.5 * M_PI;
    m.theta_dot = 0.0;
    return m;
  }
  // pump/stokes = exp(u); evaluating through u keeps the angle exact in the
  // tails where the Gaussians themselves underflow.
  const double slope = s.t_s / (s.sigma * s.sigma);
  const double u = std::log(s.omega_p / s.omega_s) - slope * (t - 0.5 * s.t_s);
  m.theta = std::atan(std::exp(u));
  m.theta_dot = -0.5 * slope / std::cosh(u);
  return m;
}

double cd_envelope_closed_form(double t, const PulseSchedule& s) {
  s.validate();
  const double scale = std::max(s.omega_p, s.omega_s);
  if (std::abs(s.omega_p - s.omega_s) > 1e-12 * std::max(scale, 1.0))
    throw std::invalid_argument(
        "cd_envelope_closed_form: requires omega_p == omega_s; use cd_generic for "
        "unequal amplitudes");
  const double a = -s.t_s / (s.sigma * s.sigma);
  return a / std::cosh(a * (t - 0.5 * s.t_s));
}

double cd_generic(double t, const PulseSchedule& s) { return 2.0 * mixing_angle(t, s).theta_dot; }

ComplexMatrix lambda_hamiltonian(double t, const PulseSchedule& s, const DriveConfig& d) {
  s.validate();
  d.validate();
  const Envelopes e = envelopes(t, s);
  ComplexMatrix h(3, 3);
  h(2, 0) = 0.5 * e.pump;
  h(0, 2) = 0.5 * e.pump;
  h(2, 1) = 0.5 * e.stokes;
  h(1, 2) = 0.5 * e.stokes;
  h(2, 2) = d.delta_1;
  h(1, 1) = d.delta_2;
  if (d.cd_enabled) {
    const double oa = d.cd_scale * cd_generic(t, s);
    h(1, 0) = cplx(0.0, -0.5 * oa);
    h(0, 1) = cplx(0.0, 0.5 * oa);
  }
  return h;
}

ComplexMatrix dark_state(double t, const PulseSchedule& s) {
  const double theta = mixing_angle(t, s).theta;
  return ComplexMatrix::column({std::cos(theta), -std::sin(theta), 0.0});
}

double adiabaticity_ratio(double t, const PulseSchedule& s) {
  const MixingAngle m = mixing_angle(t, s);
  const Envelopes e = envelopes(t, s);
  const double omega0 = std::hypot(e.pump, e.stokes);
  if (omega0 < kAmplitudeFloor) return std::numeric_limits<double>::infinity();
  return std::abs(m.theta_dot) / omega0;
}

}  // namespace polsim
