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

#include "polsim/lindblad.hpp"
#include "polsim/pulses.hpp"

using namespace polsim;

namespace {

PulseSchedule standard_schedule() { return PulseSchedule{}; }  // 25.5 MHz, -30 ns, 20 ns

}  // namespace

TEST_CASE("envelope peaks and symmetry point") {
  const PulseSchedule s = standard_schedule();
  const double atten = std::exp(-s.t_s * s.t_s / (2.0 * s.sigma * s.sigma));

  const Envelopes at0 = envelopes(0.0, s);
  CHECK(at0.pump == doctest::Approx(s.omega_p).epsilon(1e-14));
  CHECK(at0.stokes == doctest::Approx(s.omega_s * atten).epsilon(1e-14));

  const Envelopes at_ts = envelopes(s.t_s, s);
  CHECK(at_ts.stokes == doctest::Approx(s.omega_s).epsilon(1e-14));
  CHECK(at_ts.pump == doctest::Approx(s.omega_p * atten).epsilon(1e-14));

  const Envelopes mid = envelopes(0.5 * s.t_s, s);
  CHECK(mid.pump == doctest::Approx(mid.stokes).epsilon(1e-14));
}

TEST_CASE("mixing angle endpoints and symmetry") {
  const PulseSchedule s = standard_schedule();
  // Stokes-first schedule: the angle starts at 0 (dark state = |1>).
  CHECK(mixing_angle(-1000.0, s).theta < 1e-10);
  CHECK(mixing_angle(0.5 * s.t_s, s).theta == doctest::Approx(M_PI / 4).epsilon(1e-14));
  // ... and ends at pi/2 (dark state on |2>).
  CHECK(mixing_angle(1000.0, s).theta == doctest::Approx(M_PI / 2).epsilon(1e-12));
}

TEST_CASE("mixing angle matches the envelope ratio at moderate times") {
  const PulseSchedule s = standard_schedule();
  for (double t = -60.0; t <= 60.0; t += 7.3) {
    const Envelopes e = envelopes(t, s);
    const double direct = std::atan2(e.pump, e.stokes);
    CHECK(mixing_angle(t, s).theta == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("theta_dot is the analytic derivative") {
  const PulseSchedule s = standard_schedule();
  // peak rate: 2 theta_dot(t_s/2) = |t_s|/sigma^2
  CHECK(2.0 * mixing_angle(0.5 * s.t_s, s).theta_dot ==
        doctest::Approx(std::abs(s.t_s) / (s.sigma * s.sigma)).epsilon(1e-14));
  CHECK(2.0 * mixing_angle(0.5 * s.t_s, s).theta_dot == doctest::Approx(0.075).epsilon(1e-14));
  // finite-difference cross-check
  const double h = 1e-5;
  for (double t = -80.0; t <= 80.0; t += 11.7) {
    const double fd = (mixing_angle(t + h, s).theta - mixing_angle(t - h, s).theta) / (2.0 * h);
    CHECK(mixing_angle(t, s).theta_dot == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("mixing angle is undefined only for an empty schedule") {
  PulseSchedule s = standard_schedule();
  s.omega_p = 0.0;
  s.omega_s = 0.0;
  CHECK_THROWS_AS(mixing_angle(0.0, s), std::invalid_argument);

  s.omega_p = 0.0;
  s.omega_s = kTwoPi * 0.01;
  CHECK(mixing_angle(3.0, s).theta == 0.0);
  CHECK(mixing_angle(3.0, s).theta_dot == 0.0);

  s.omega_p = kTwoPi * 0.01;
  s.omega_s = 0.0;
  CHECK(mixing_angle(3.0, s).theta == doctest::Approx(M_PI / 2));
  CHECK(mixing_angle(3.0, s).theta_dot == 0.0);
}

TEST_CASE("closed-form CD envelope") {
  const PulseSchedule s = standard_schedule();
  const double peak = std::abs(s.t_s) / (s.sigma * s.sigma);

  CHECK(cd_envelope_closed_form(0.5 * s.t_s, s) == doctest::Approx(peak).epsilon(1e-14));
  CHECK(peak == doctest::Approx(0.075).epsilon(1e-14));
  // 0.075 rad/ns is about 2pi * 11.94 MHz
  CHECK(peak / kTwoPi * 1e3 == doctest::Approx(11.94).epsilon(1e-3));

  CHECK(std::abs(cd_envelope_closed_form(-500.0, s)) < 1e-12);
  CHECK(std::abs(cd_envelope_closed_form(500.0, s)) < 1e-12);
  for (double x : {3.0, 11.0, 27.5})
    CHECK(cd_envelope_closed_form(0.5 * s.t_s + x, s) ==
          doctest::Approx(cd_envelope_closed_form(0.5 * s.t_s - x, s)).epsilon(1e-14));
}

TEST_CASE("closed-form CD refuses unequal amplitudes") {
  PulseSchedule s = standard_schedule();
  s.omega_p = 2.0 * s.omega_s;
  CHECK_THROWS_WITH_AS(cd_envelope_closed_form(0.0, s),
                       doctest::Contains("use cd_generic"), std::invalid_argument);
}

TEST_CASE("generic CD equals the closed form for equal amplitudes") {
  const PulseSchedule s = standard_schedule();
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const double t = -100.0 + 200.0 * k / 999.0;
    worst = std::max(worst,
                     std::abs(cd_generic(t, s) - cd_envelope_closed_form(t, s)));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("constant envelope ratio gives no CD drive") {
  PulseSchedule s = standard_schedule();
  s.omega_p = 2.0 * s.omega_s;
  s.t_s = 0.0;
  for (double t : {-50.0, -3.0, 0.0, 17.0})
    CHECK(cd_generic(t, s) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("CD drive flips sign under schedule time reversal") {
  const PulseSchedule s = standard_schedule();
  PulseSchedule rev = s;
  rev.t_s = -s.t_s;
  for (double t = -90.0; t <= 90.0; t += 13.1)
    CHECK(cd_generic(-t, rev) == doctest::Approx(-cd_generic(t, s)).epsilon(1e-12));
}

TEST_CASE("lambda_hamiltonian structure and spectrum") {
  const PulseSchedule s = standard_schedule();
  DriveConfig d;

  SUBCASE("all drives zero gives the zero matrix") {
    PulseSchedule off = s;
    off.omega_p = off.omega_s = 0.0;
    const ComplexMatrix h = lambda_hamiltonian(0.0, off, d);
    CHECK(h.max_abs() == 0.0);
  }

  SUBCASE("Hermitian by construction, pump/Stokes placement") {
    const ComplexMatrix h = lambda_hamiltonian(5.0, s, d);
    CHECK(h == h.adjoint());
    const Envelopes e = envelopes(5.0, s);
    CHECK(h(2, 0) == cplx(0.5 * e.pump));
    CHECK(h(2, 1) == cplx(0.5 * e.stokes));
    CHECK(h(0, 1) == cplx(0.0));
  }

  SUBCASE("resonant spectrum is {0, +-Omega_0/2}") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> dist(-80.0, 80.0);
    for (int rep = 0; rep < 12; ++rep) {
      const double t = dist(rng);
      const Envelopes e = envelopes(t, s);
      const double omega0 = std::hypot(e.pump, e.stokes);
      const EigenDecomposition eig = hermitian_eig(lambda_hamiltonian(t, s, d));
      CHECK(std::abs(eig.eigenvalues[0] + 0.5 * omega0) < 1e-10);
      CHECK(std::abs(eig.eigenvalues[1]) < 1e-10);
      CHECK(std::abs(eig.eigenvalues[2] - 0.5 * omega0) < 1e-10);
    }
  }

  SUBCASE("detunings sit on the diagonal unhalved") {
    DriveConfig det;
    det.delta_1 = 0.3;
    det.delta_2 = -0.1;
    const ComplexMatrix h = lambda_hamiltonian(0.0, s, det);
    CHECK(h(2, 2) == cplx(0.3));
    CHECK(h(1, 1) == cplx(-0.1));
  }

  SUBCASE("CD-only Hamiltonian has eigenvalues +-Omega_a/2") {
    PulseSchedule cd_only = s;
    DriveConfig don;
    don.cd_enabled = true;
    const double oa = cd_generic(-15.0, cd_only);
    ComplexMatrix h = lambda_hamiltonian(-15.0, cd_only, don);
    // remove the pump/Stokes part to isolate the CD block
    h(2, 0) = h(0, 2) = h(2, 1) = h(1, 2) = 0.0;
    const EigenDecomposition eig = hermitian_eig(h);
    CHECK(eig.eigenvalues[0] == doctest::Approx(-0.5 * oa).epsilon(1e-12));
    CHECK(eig.eigenvalues[2] == doctest::Approx(0.5 * oa).epsilon(1e-12));
    CHECK(h(1, 0) == cplx(0.0, -0.5 * oa));
  }

  SUBCASE("cd_scale multiplies the CD matrix element") {
    DriveConfig don;
    don.cd_enabled = true;
    don.cd_scale = 0.25;
    const ComplexMatrix h = lambda_hamiltonian(-15.0, s, don);
    CHECK(h(1, 0) == cplx(0.0, -0.125 * cd_generic(-15.0, s)));
  }
}

TEST_CASE("dark state is the resonant null vector") {
  const PulseSchedule s = standard_schedule();
  const DriveConfig d;
  for (double t = -70.0; t <= 70.0; t += 9.7) {
    const ComplexMatrix n0 = dark_state(t, s);
    CHECK(std::abs(inner(n0, n0) - cplx(1.0)) < 1e-14);
    CHECK(std::abs(n0(2, 0)) == 0.0);
    const Envelopes e = envelopes(t, s);
    const double omega0 = std::hypot(e.pump, e.stokes);
    const ComplexMatrix hn = lambda_hamiltonian(t, s, d) * n0;
    CHECK(hn.max_abs() <= 1e-10 * std::max(omega0, 1e-30));
  }
}

TEST_CASE("dark state endpoints") {
  PulseSchedule s = standard_schedule();
  // theta -> 0: all weight on |1>
  ComplexMatrix n0 = dark_state(-1000.0, s);
  CHECK(std::abs(n0(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  // theta = pi/2 (no Stokes): weight entirely on the metastable state |2>
  s.omega_s = 0.0;
  n0 = dark_state(0.0, s);
  CHECK(std::abs(n0(1, 0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(n0(1, 0).real() == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("adiabaticity ratio") {
  const PulseSchedule s = standard_schedule();
  // Hand-evaluated at the crossing: theta_dot = |t_s|/(2 sigma^2) against
  // Omega_0 = sqrt(2) * omega_p * exp(-t_s^2/(8 sigma^2)).
  const double theta_dot = std::abs(s.t_s) / (2.0 * s.sigma * s.sigma);
  const double omega0 =
      std::sqrt(2.0) * s.omega_p * std::exp(-s.t_s * s.t_s / (8.0 * s.sigma * s.sigma));
  const double expect = theta_dot / omega0;
  CHECK(adiabaticity_ratio(0.5 * s.t_s, s) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(expect == doctest::Approx(0.2193).epsilon(1e-3));

  // scales inversely with the drive amplitudes
  PulseSchedule big = s;
  big.omega_p *= 10.0;
  big.omega_s *= 10.0;
  CHECK(adiabaticity_ratio(0.5 * s.t_s, big) ==
        doctest::Approx(0.1 * adiabaticity_ratio(0.5 * s.t_s, s)).epsilon(1e-12));

  // finite and positive over the protocol window
  for (double t = -100.0; t <= 100.0; t += 2.5) {
    const double r = adiabaticity_ratio(t, s);
    CHECK(std::isfinite(r));
    CHECK(r > 0.0);
  }

  // +infinity sentinel where the envelopes underflow entirely
  CHECK(std::isinf(adiabaticity_ratio(-4000.0, s)));
}

TEST_CASE("CD drive transports the dark state exactly") {
  // Starting exactly in the instantaneous dark state, the counterdiabatic
  // Hamiltonian keeps the overlap at machine precision over the whole window.
  const PulseSchedule s = standard_schedule();
  DriveConfig d;
  d.cd_enabled = true;
  IntegratorConfig cfg;
  cfg.t0 = -5.0 * s.sigma;
  cfg.tf = 100.0;
  cfg.dt = 0.01;
  const SchrodingerResult res = schrodinger_evolve(
      [&](double t) { return lambda_hamiltonian(t, s, d); }, cfg, dark_state(cfg.t0, s));
  double worst = 1.0;
  for (std::size_t k = 0; k < res.times.size(); ++k) {
    const double ov = std::norm(inner(dark_state(res.times[k], s), res.states[k]));
    worst = std::min(worst, ov);
  }
  CHECK(worst >= 1.0 - 1e-9);
}

TEST_CASE("schedule validation") {
  PulseSchedule s = standard_schedule();
  s.sigma = 0.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = standard_schedule();
  s.omega_p = -1.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  DriveConfig d;
  d.cd_scale = -0.1;
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}
