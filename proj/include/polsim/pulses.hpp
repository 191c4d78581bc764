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

#include "polsim/linalg.hpp"

namespace polsim {

/// Gaussian pump/Stokes pulse pair with common width:
///   pump(t)   = omega_p exp(-t^2 / 2 sigma^2)          (peak at t = 0)
///   stokes(t) = omega_s exp(-(t-t_s)^2 / 2 sigma^2)    (peak at t = t_s)
/// t_s < 0 puts the Stokes pulse first (the counter-intuitive ordering).
/// Amplitudes in rad/ns, times in ns.
struct PulseSchedule {
  double omega_p = kTwoPi * 0.0255;
  double omega_s = kTwoPi * 0.0255;
  double t_s = -30.0;
  double sigma = 20.0;

  void validate() const;
};

/// Detunings and counterdiabatic-drive switches for the three-level
/// Hamiltonian. delta_1 is the one-photon detuning on |3>, delta_2 the
/// two-photon detuning on |2> (rad/ns). cd_scale multiplies the CD amplitude
/// (1 = exact transitionless drive).
struct DriveConfig {
  double delta_1 = 0.0;
  double delta_2 = 0.0;
  bool cd_enabled = false;
  double cd_scale = 1.0;

  void validate() const;
};

struct Envelopes {
  double pump = 0.0;
  double stokes = 0.0;
};
Envelopes envelopes(double t, const PulseSchedule& s);

/// Mixing angle tan(theta) = pump(t)/stokes(t), theta in [0, pi/2], and its
/// analytic time derivative. For the common-width Gaussian pair both reduce to
/// closed forms in u = ln(omega_p/omega_s) - (t_s/sigma^2)(t - t_s/2):
///   theta = atan(e^u),  theta_dot = -(t_s / 2 sigma^2) sech(u),
/// which stay well-defined in the far tails where the envelopes underflow.
/// Throws when both peak amplitudes are below 1e-12 rad/ns (angle undefined).
struct MixingAngle {
  double theta = 0.0;
  double theta_dot = 0.0;
};
MixingAngle mixing_angle(double t, const PulseSchedule& s);

/// Counterdiabatic envelope for equal peak amplitudes:
///   omega_a(t) = -(t_s/sigma^2) sech[-(t_s/sigma^2)(t - t_s/2)].
/// Refuses unequal amplitudes; use cd_generic for those.
double cd_envelope_closed_form(double t, const PulseSchedule& s);

/// Generic counterdiabatic envelope omega_a(t) = 2 theta_dot(t); coincides
/// with cd_envelope_closed_form when omega_p == omega_s.
double cd_generic(double t, const PulseSchedule& s);

/// Three-level Hamiltonian in the basis (|1>, |2>, |3>) (rad/ns):
///   H = 1/2 [pump(t)(|3><1| + h.c.) + stokes(t)(|3><2| + h.c.)]
///       + delta_1 |3><3| + delta_2 |2><2|
///       - i/2 cd_scale omega_a(t) (|2><1| - |1><2|)   [if cd_enabled]
/// Hermitian by construction for all t.
ComplexMatrix lambda_hamiltonian(double t, const PulseSchedule& s, const DriveConfig& d);

/// Instantaneous dark state (cos theta, -sin theta, 0) in the (|1>,|2>,|3>)
/// basis: the zero-eigenvalue state with no weight on |3>. At theta -> pi/2
/// the population sits entirely on the metastable state |2>.
ComplexMatrix dark_state(double t, const PulseSchedule& s);

/// Local adiabaticity diagnostic |theta_dot(t)| / Omega_0(t) with
/// Omega_0 = sqrt(pump^2 + stokes^2); returns +infinity where Omega_0
/// underflows. Adiabatic transfer requires this to stay << 1.
double adiabaticity_ratio(double t, const PulseSchedule& s);

}  // namespace polsim
