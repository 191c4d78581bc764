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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polsim/config.hpp"
#include "polsim/experiments.hpp"
#include "polsim/version.hpp"

namespace py = pybind11;
using namespace polsim;

namespace {

py::array_t<cplx> to_numpy(const ComplexMatrix& m) {
  py::array_t<cplx> out({m.rows(), m.cols()});
  auto buf = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) buf(i, j) = m(i, j);
  return out;
}

py::array_t<cplx> to_numpy_1d(const ComplexMatrix& column) {
  py::array_t<cplx> out(column.rows());
  auto buf = out.mutable_unchecked<1>();
  for (std::size_t i = 0; i < column.rows(); ++i) buf(i) = column(i, 0);
  return out;
}

ComplexMatrix from_numpy(const py::array_t<cplx, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2) throw std::invalid_argument("expected a 2-D complex array");
  ComplexMatrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
  auto buf = a.unchecked<2>();
  for (py::ssize_t i = 0; i < a.shape(0); ++i)
    for (py::ssize_t j = 0; j < a.shape(1); ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = buf(i, j);
  return m;
}

py::array_t<double> table_entries(const std::array<std::array<double, 4>, 4>& t) {
  py::array_t<double> out({4, 4});
  auto buf = out.mutable_unchecked<2>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) buf(i, j) = t[i][j];
  return out;
}

py::array_t<double> populations_array(const std::vector<std::array<double, 3>>& pops) {
  py::array_t<double> out({pops.size(), static_cast<std::size_t>(3)});
  auto buf = out.mutable_unchecked<2>();
  for (std::size_t k = 0; k < pops.size(); ++k)
    for (int i = 0; i < 3; ++i) buf(k, i) = pops[k][i];
  return out;
}

FidelityConvention convention_from_string(const std::string& name) {
  if (name == "squared") return FidelityConvention::squared;
  if (name == "unsquared") return FidelityConvention::unsquared;
  throw std::invalid_argument("fidelity convention must be 'squared' or 'unsquared'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dressed-state Lambda-system STIRAP/saSTIRAP simulator for a driven "
            "transmon-cavity circuit";
  m.attr("__version__") = kVersion;
  m.attr("TWO_PI") = kTwoPi;

  py::class_<SystemParams>(m, "SystemParams",
                           "Driven transmon-cavity parameters (angular rad/ns units)")
      .def(py::init<>())
      .def_readwrite("omega_q", &SystemParams::omega_q)
      .def_readwrite("omega_r", &SystemParams::omega_r)
      .def_readwrite("omega_d", &SystemParams::omega_d)
      .def_readwrite("g", &SystemParams::g)
      .def_readwrite("omega_drive", &SystemParams::omega_drive)
      .def_readwrite("kappa", &SystemParams::kappa)
      .def_readwrite("gamma_q", &SystemParams::gamma_q)
      .def_readwrite("n_max", &SystemParams::n_max)
      .def("detuning", &SystemParams::detuning)
      .def("chi", &SystemParams::chi)
      .def("dispersive_ratio", &SystemParams::dispersive_ratio)
      .def("hilbert_dim", &SystemParams::hilbert_dim)
      .def("validate", &SystemParams::validate);

  py::class_<PulseSchedule>(m, "PulseSchedule", "Gaussian pump/Stokes pulse pair")
      .def(py::init<>())
      .def_readwrite("omega_p", &PulseSchedule::omega_p)
      .def_readwrite("omega_s", &PulseSchedule::omega_s)
      .def_readwrite("t_s", &PulseSchedule::t_s)
      .def_readwrite("sigma", &PulseSchedule::sigma)
      .def("validate", &PulseSchedule::validate);

  py::class_<DriveConfig>(m, "DriveConfig")
      .def(py::init<>())
      .def_readwrite("delta_1", &DriveConfig::delta_1)
      .def_readwrite("delta_2", &DriveConfig::delta_2)
      .def_readwrite("cd_enabled", &DriveConfig::cd_enabled)
      .def_readwrite("cd_scale", &DriveConfig::cd_scale);

  py::class_<IntegratorConfig>(m, "IntegratorConfig")
      .def(py::init<>())
      .def_readwrite("t0", &IntegratorConfig::t0)
      .def_readwrite("tf", &IntegratorConfig::tf)
      .def_readwrite("dt", &IntegratorConfig::dt)
      .def_readwrite("store_states", &IntegratorConfig::store_states);

  py::enum_<RatesSource>(m, "RatesSource")
      .value("table_derived", RatesSource::table_derived)
      .value("manual", RatesSource::manual);

  py::enum_<SweepMetric>(m, "SweepMetric")
      .value("final_p2", SweepMetric::final_p2)
      .value("max_p2", SweepMetric::max_p2)
      .value("fidelity", SweepMetric::fidelity);

  py::class_<ProtocolConfig>(m, "ProtocolConfig",
                             "One population-transfer run: |1> -> |2> via |3>")
      .def(py::init<>())
      .def_readwrite("system", &ProtocolConfig::system)
      .def_readwrite("schedule", &ProtocolConfig::schedule)
      .def_readwrite("drive", &ProtocolConfig::drive)
      .def_readwrite("integrator", &ProtocolConfig::integrator)
      .def_readwrite("rates_source", &ProtocolConfig::rates_source)
      .def_readwrite("zero_decay", &ProtocolConfig::zero_decay)
      .def_readwrite("manual_gamma_31", &ProtocolConfig::manual_gamma_31)
      .def_readwrite("manual_gamma_32", &ProtocolConfig::manual_gamma_32)
      .def_readwrite("manual_gamma_21", &ProtocolConfig::manual_gamma_21);

  py::class_<PolaritonBasis>(m, "PolaritonBasis")
      .def_property_readonly("eigenvalues",
                             [](const PolaritonBasis& b) {
                               return py::array_t<double>(b.eigenvalues.size(),
                                                          b.eigenvalues.data());
                             })
      .def_property_readonly(
          "eigenvectors", [](const PolaritonBasis& b) { return to_numpy(b.eigenvectors); })
      .def_readonly("chi", &PolaritonBasis::chi)
      .def_readonly("window_low", &PolaritonBasis::window_low)
      .def_readonly("window_high", &PolaritonBasis::window_high)
      .def_readonly("nesting_ok", &PolaritonBasis::nesting_ok)
      .def_readonly("nested_labels", &PolaritonBasis::nested_labels)
      .def_readonly("dispersive_ratio", &PolaritonBasis::dispersive_ratio);

  py::class_<TransitionTable>(m, "TransitionTable",
                              "Lambda-system constants over the nested four levels")
      .def_property_readonly("C", [](const TransitionTable& t) { return table_entries(t.C); })
      .def_property_readonly("Q", [](const TransitionTable& t) { return table_entries(t.Q); })
      .def_property_readonly("gamma",
                             [](const TransitionTable& t) { return table_entries(t.gamma); })
      .def_property_readonly(
          "omega_trans", [](const TransitionTable& t) { return table_entries(t.omega_trans); });

  py::class_<DressedStates>(m, "DressedStates")
      .def_property_readonly("plus", [](const DressedStates& d) { return to_numpy_1d(d.plus); })
      .def_property_readonly("minus", [](const DressedStates& d) { return to_numpy_1d(d.minus); })
      .def_readonly("energy_plus", &DressedStates::energy_plus)
      .def_readonly("energy_minus", &DressedStates::energy_minus)
      .def_readonly("theta", &DressedStates::theta);

  py::class_<EvolutionSummary>(m, "EvolutionSummary")
      .def_readonly("final_populations", &EvolutionSummary::final_populations)
      .def_readonly("max_populations", &EvolutionSummary::max_populations)
      .def_readonly("t_peak", &EvolutionSummary::t_peak)
      .def_readonly("max_trace_drift", &EvolutionSummary::max_trace_drift)
      .def_readonly("min_eigenvalue", &EvolutionSummary::min_eigenvalue)
      .def_readonly("fidelity_sq_final", &EvolutionSummary::fidelity_sq_final)
      .def_readonly("fidelity_unsq_final", &EvolutionSummary::fidelity_unsq_final)
      .def_readonly("fidelity_sq_peak", &EvolutionSummary::fidelity_sq_peak)
      .def_readonly("fidelity_unsq_peak", &EvolutionSummary::fidelity_unsq_peak)
      .def_readonly("gamma_31", &EvolutionSummary::gamma_31)
      .def_readonly("gamma_32", &EvolutionSummary::gamma_32)
      .def_readonly("gamma_21", &EvolutionSummary::gamma_21);

  py::class_<EvolutionResult>(m, "EvolutionResult")
      .def_property_readonly("times",
                             [](const EvolutionResult& r) {
                               return py::array_t<double>(r.times.size(), r.times.data());
                             })
      .def_property_readonly(
          "populations", [](const EvolutionResult& r) { return populations_array(r.populations); })
      .def_property_readonly("fidelity_trace",
                             [](const EvolutionResult& r) {
                               return py::array_t<double>(r.fidelity_trace.size(),
                                                          r.fidelity_trace.data());
                             })
      .def_property_readonly("rho_final",
                             [](const EvolutionResult& r) { return to_numpy(r.rho_final); })
      .def_property_readonly("rho_peak",
                             [](const EvolutionResult& r) { return to_numpy(r.rho_peak); })
      .def_property_readonly("states",
                             [](const EvolutionResult& r) {
                               py::list out;
                               for (const auto& s : r.states) out.append(to_numpy(s));
                               return out;
                             })
      .def_readonly("summary", &EvolutionResult::summary);

  py::class_<Table1Row>(m, "Table1Row")
      .def_readonly("quantity", &Table1Row::quantity)
      .def_readonly("computed", &Table1Row::computed)
      .def_readonly("reference", &Table1Row::reference)
      .def_readonly("tolerance", &Table1Row::tolerance)
      .def_readonly("passed", &Table1Row::pass);

  py::class_<Table1Report>(m, "Table1Report")
      .def_readonly("nesting_ok", &Table1Report::nesting_ok)
      .def_readonly("chi", &Table1Report::chi)
      .def_readonly("window_low", &Table1Report::window_low)
      .def_readonly("window_high", &Table1Report::window_high)
      .def_readonly("converged", &Table1Report::converged)
      .def_readonly("convergence_delta", &Table1Report::convergence_delta)
      .def_readonly("rows", &Table1Report::rows)
      .def_readonly("all_pass", &Table1Report::all_pass)
      .def_readonly("table", &Table1Report::table);

  py::class_<SweepGrid>(m, "SweepGrid")
      .def_property_readonly("axis1_name",
                             [](const SweepGrid& g) { return g.axis1.name; })
      .def_property_readonly("axis2_name",
                             [](const SweepGrid& g) { return g.axis2.name; })
      .def_property_readonly("axis1_values",
                             [](const SweepGrid& g) {
                               return py::array_t<double>(g.axis1.values.size(),
                                                          g.axis1.values.data());
                             })
      .def_property_readonly("axis2_values",
                             [](const SweepGrid& g) {
                               return py::array_t<double>(g.axis2.values.size(),
                                                          g.axis2.values.data());
                             })
      .def_property_readonly("cells",
                             [](const SweepGrid& g) {
                               py::array_t<double> out(
                                   {g.axis1.values.size(), g.axis2.values.size()});
                               auto buf = out.mutable_unchecked<2>();
                               for (std::size_t i = 0; i < g.axis1.values.size(); ++i)
                                 for (std::size_t j = 0; j < g.axis2.values.size(); ++j)
                                   buf(i, j) = g.at(i, j);
                               return out;
                             })
      .def_readonly("all_ok", &SweepGrid::all_ok);

  // circuit model
  m.def("build_hrwa", [](const SystemParams& p) { return to_numpy(build_hrwa(p)); },
        py::arg("params"), "Rotating-frame Hamiltonian; tensor order qubit (x) cavity");
  m.def("polariton_basis", &polariton_basis, py::arg("params"));
  m.def("dressed_state_analytic", &dressed_state_analytic, py::arg("params"), py::arg("n"));
  m.def("transition_table",
        py::overload_cast<const SystemParams&, const PolaritonBasis&>(&transition_table),
        py::arg("params"), py::arg("basis"));
  m.def("transition_table",
        [](const SystemParams& p) { return transition_table(p, polariton_basis(p)); },
        py::arg("params"), "Convenience overload that diagonalizes internally");
  m.def("reproduce_table1", &reproduce_table1, py::arg("params"));

  // pulses
  m.def("envelopes",
        [](double t, const PulseSchedule& s) {
          const Envelopes e = envelopes(t, s);
          return py::make_tuple(e.pump, e.stokes);
        },
        py::arg("t"), py::arg("schedule"));
  m.def("mixing_angle",
        [](double t, const PulseSchedule& s) {
          const MixingAngle a = mixing_angle(t, s);
          return py::make_tuple(a.theta, a.theta_dot);
        },
        py::arg("t"), py::arg("schedule"));
  m.def("cd_envelope_closed_form", &cd_envelope_closed_form, py::arg("t"), py::arg("schedule"));
  m.def("cd_generic", &cd_generic, py::arg("t"), py::arg("schedule"));
  m.def("lambda_hamiltonian",
        [](double t, const PulseSchedule& s, const DriveConfig& d) {
          return to_numpy(lambda_hamiltonian(t, s, d));
        },
        py::arg("t"), py::arg("schedule"), py::arg("drive"));
  m.def("dark_state",
        [](double t, const PulseSchedule& s) { return to_numpy_1d(dark_state(t, s)); },
        py::arg("t"), py::arg("schedule"));
  m.def("adiabaticity_ratio", &adiabaticity_ratio, py::arg("t"), py::arg("schedule"));

  // linear algebra
  m.def("hermitian_eig",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& a) {
          const EigenDecomposition eig = hermitian_eig(from_numpy(a));
          return py::make_tuple(
              py::array_t<double>(eig.eigenvalues.size(), eig.eigenvalues.data()),
              to_numpy(eig.eigenvectors));
        },
        py::arg("matrix"), "Returns (eigenvalues ascending, eigenvector columns)");
  m.def("kron",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& a,
           const py::array_t<cplx, py::array::c_style | py::array::forcecast>& b) {
          return to_numpy(kron(from_numpy(a), from_numpy(b)));
        },
        py::arg("a"), py::arg("b"));
  m.def("matrix_sqrt_psd",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& a) {
          return to_numpy(matrix_sqrt_psd(from_numpy(a)));
        },
        py::arg("matrix"));

  // master equation and protocols
  m.def("dissipator",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& op,
           const py::array_t<cplx, py::array::c_style | py::array::forcecast>& rho) {
          return to_numpy(dissipator(from_numpy(op), from_numpy(rho)));
        },
        py::arg("op"), py::arg("rho"));
  m.def("fidelity",
        [](const py::array_t<cplx, py::array::c_style | py::array::forcecast>& rho_f,
           const py::array_t<cplx, py::array::c_style | py::array::forcecast>& rho_t,
           const std::string& convention) {
          return fidelity(from_numpy(rho_f), from_numpy(rho_t),
                          convention_from_string(convention));
        },
        py::arg("rho_f"), py::arg("rho_t"), py::arg("convention") = "unsquared");
  m.def("run_protocol", &run_protocol, py::arg("config"),
        py::call_guard<py::gil_scoped_release>(),
        "Integrate one STIRAP/saSTIRAP run from |1><1| and summarize against |2><2|");
  m.def("sweep2d",
        [](const ProtocolConfig& base, const std::string& axis1_name,
           const std::vector<double>& axis1_values, const std::string& axis2_name,
           const std::vector<double>& axis2_values, const std::string& metric, int threads) {
          return sweep2d(base, {axis1_name, axis1_values}, {axis2_name, axis2_values},
                         sweep_metric_from_string(metric), threads);
        },
        py::arg("base"), py::arg("axis1_name"), py::arg("axis1_values"), py::arg("axis2_name"),
        py::arg("axis2_values"), py::arg("metric") = "final_p2", py::arg("threads") = 1,
        py::call_guard<py::gil_scoped_release>());
}
