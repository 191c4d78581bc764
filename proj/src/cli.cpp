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

#include "polsim/cli.hpp"

#include <cstdio>
#include <filesystem>

#include "polsim/config.hpp"
#include "polsim/csv.hpp"
#include "polsim/version.hpp"

namespace polsim {

namespace {

ToolConfig load_config(const CliOptions& opt) {
  return opt.config_path.empty() ? default_config() : parse_config_file(opt.config_path);
}

std::string out_path(const CliOptions& opt, const char* name) {
  std::filesystem::create_directories(opt.out_dir);
  return (std::filesystem::path(opt.out_dir) / name).string();
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

double rad_ns_to_mhz(double w) { return w / kTwoPi * 1e3; }

}  // namespace

int cmd_table(const CliOptions& opt) {
  const ToolConfig cfg = load_config(opt);
  const Table1Report report = reproduce_table1(cfg.protocol.system);

  CsvTable csv;
  csv.header = {"quantity", "computed", "paper_value", "abs_dev", "pass"};
  if (!report.nesting_ok) {
    csv.rows.push_back({"nesting_ok", "0", "1", "1", "false"});
  } else {
    for (const Table1Row& row : report.rows)
      csv.rows.push_back({row.quantity, format_double(row.computed), format_double(row.reference),
                          format_double(std::abs(row.computed - row.reference)),
                          bool_str(row.pass)});
  }
  const std::string path = out_path(opt, "table1_comparison.csv");
  write_csv(path, csv);

  std::printf("polsim %s — transition-table comparison\n", kVersion);
  std::printf("nesting window: %.6g < omega_d/2pi = %.6g < %.6g GHz  (chi/2pi = %.6g MHz) -> %s\n",
              report.window_low / kTwoPi, cfg.protocol.system.omega_d / kTwoPi,
              report.window_high / kTwoPi, report.chi / kTwoPi * 1e3,
              report.nesting_ok ? "nested" : "NOT NESTED");
  if (report.dispersive_ratio > 0.2)
    std::printf("warning: g/|detuning| = %.3f exceeds 0.2; dispersive regime is marginal\n",
                report.dispersive_ratio);
  if (report.nesting_ok) {
    for (const Table1Row& row : report.rows)
      std::printf("  %-9s computed %10.4f  reference %8.2f  [%s]\n", row.quantity.c_str(),
                  row.computed, row.reference, row.pass ? "pass" : "FAIL");
    std::printf("truncation convergence (n_max %d -> %d): max matrix-element change %.3g -> %s\n",
                cfg.protocol.system.n_max, 2 * cfg.protocol.system.n_max, report.convergence_delta,
                report.converged ? "converged" : "NOT CONVERGED");
  }
  std::printf("wrote %s\n", path.c_str());
  return report.all_pass ? 0 : 1;
}

namespace {

void write_summary(const CliOptions& opt, const ToolConfig& cfg,
                   const std::vector<std::pair<std::string, std::string>>& extra) {
  CsvTable csv;
  csv.header = {"key", "value"};
  for (const auto& [k, v] : extra) csv.rows.push_back({k, v});
  for (const auto& [k, v] : config_echo(cfg)) csv.rows.push_back({k, v});
  csv.rows.push_back({"command", "run"});
  csv.rows.push_back({"config_path", opt.config_path.empty() ? "(defaults)" : opt.config_path});
  csv.rows.push_back({"output_dir", opt.out_dir});
  csv.rows.push_back({"tool_version", kVersion});
  csv.rows.push_back({"deterministic", "true"});
  write_csv(out_path(opt, "summary.csv"), csv);
}

}  // namespace

int cmd_run(const CliOptions& opt) {
  const ToolConfig cfg = load_config(opt);
  EvolutionResult res;
  try {
    res = run_protocol(cfg.protocol);
  } catch (const IntegratorDivergedError& err) {
    write_summary(opt, cfg,
                  {{"error", "integrator_diverged"},
                   {"error_t_ns", format_double(err.t)},
                   {"max_trace_drift", format_double(err.trace_drift)},
                   {"min_eigenvalue", format_double(err.min_eigenvalue)},
                   {"advice", "reduce dt_ns"}});
    std::fprintf(stderr, "error: %s\n", err.what());
    return 1;
  }

  CsvTable pops;
  pops.header = {"t_ns", "P1", "P2", "P3"};
  for (std::size_t k = 0; k < res.times.size(); ++k)
    pops.rows.push_back({format_double(res.times[k]), format_double(res.populations[k][0]),
                         format_double(res.populations[k][1]),
                         format_double(res.populations[k][2])});
  write_csv(out_path(opt, "populations.csv"), pops);

  const EvolutionSummary& s = res.summary;
  write_summary(opt, cfg,
                {{"final_p1", format_double(s.final_populations[0])},
                 {"final_p2", format_double(s.final_populations[1])},
                 {"final_p3", format_double(s.final_populations[2])},
                 {"max_p2", format_double(s.max_populations[1])},
                 {"t_peak_p2_ns", format_double(s.t_peak)},
                 {"fidelity_sq_final", format_double(s.fidelity_sq_final)},
                 {"fidelity_unsq_final", format_double(s.fidelity_unsq_final)},
                 {"fidelity_sq_peak", format_double(s.fidelity_sq_peak)},
                 {"fidelity_unsq_peak", format_double(s.fidelity_unsq_peak)},
                 {"max_trace_drift", format_double(s.max_trace_drift)},
                 {"min_eigenvalue", format_double(s.min_eigenvalue)},
                 {"gamma_31_2pi_mhz", format_double(rad_ns_to_mhz(s.gamma_31))},
                 {"gamma_32_2pi_mhz", format_double(rad_ns_to_mhz(s.gamma_32))},
                 {"gamma_21_2pi_mhz", format_double(rad_ns_to_mhz(s.gamma_21))}});

  std::printf("polsim %s — %s protocol\n", kVersion,
              cfg.protocol.drive.cd_enabled ? "saSTIRAP" : "STIRAP");
  std::printf("final P2 = %.6f   max P2 = %.6f (at t = %.2f ns)\n", s.final_populations[1],
              s.max_populations[1], s.t_peak);
  std::printf("fidelity vs |2><2| (unsquared/squared): final %.6f / %.6f, peak %.6f / %.6f\n",
              s.fidelity_unsq_final, s.fidelity_sq_final, s.fidelity_unsq_peak,
              s.fidelity_sq_peak);
  std::printf("trace drift %.3g, min eigenvalue %.3g\n", s.max_trace_drift, s.min_eigenvalue);
  std::printf("wrote %s and %s\n", out_path(opt, "populations.csv").c_str(),
              out_path(opt, "summary.csv").c_str());
  return 0;
}

int cmd_sweep(const CliOptions& opt) {
  const ToolConfig cfg = load_config(opt);
  SweepMetric metric = cfg.sweep.metric;
  if (!opt.metric_override.empty()) metric = sweep_metric_from_string(opt.metric_override);

  const SweepGrid grid =
      sweep2d(cfg.protocol, cfg.sweep.axis1, cfg.sweep.axis2, metric, opt.threads);

  // Detuning axes are reported in MHz to match the config units.
  const auto axis_out = [](const SweepAxis& axis, double v) {
    const bool detuning = axis.name == "delta_1" || axis.name == "delta_2";
    return format_double(detuning ? rad_ns_to_mhz(v) : v);
  };

  CsvTable csv;
  csv.header = {"axis1_name", "axis1_value", "axis2_name", "axis2_value", "metric", "value"};
  for (std::size_t i1 = 0; i1 < grid.axis1.values.size(); ++i1)
    for (std::size_t i2 = 0; i2 < grid.axis2.values.size(); ++i2)
      csv.rows.push_back({grid.axis1.name, axis_out(grid.axis1, grid.axis1.values[i1]),
                          grid.axis2.name, axis_out(grid.axis2, grid.axis2.values[i2]),
                          to_string(metric), format_double(grid.at(i1, i2))});
  const std::string path = out_path(opt, "sweep.csv");
  write_csv(path, csv);

  std::size_t failed = 0;
  for (char ok : grid.cell_ok)
    if (!ok) ++failed;
  std::printf("polsim %s — sweep %s x %s, metric %s: %zu cells, %zu failed\n", kVersion,
              grid.axis1.name.c_str(), grid.axis2.name.c_str(), to_string(metric).c_str(),
              grid.cells.size(), failed);
  std::printf("wrote %s\n", path.c_str());
  return grid.all_ok ? 0 : 1;
}

}  // namespace polsim
