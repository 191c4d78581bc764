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

#include <stdexcept>
#include <string>
#include <vector>

#include "polsim/experiments.hpp"

namespace polsim {

/// Config-file problem; the message carries the offending key and line number.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sweep request: axis names plus values in internal units (rad/ns for
/// detunings). Omitted value lists fall back to the built-in default ranges.
struct SweepSpec {
  SweepAxis axis1{"delta_1", {}};
  SweepAxis axis2{"delta_2", {}};
  SweepMetric metric = SweepMetric::final_p2;
};

/// Everything a CLI command needs, parsed and converted to internal units.
struct ToolConfig {
  ProtocolConfig protocol;
  SweepSpec sweep;
};

/// Default values per sweep axis: sigma 5..40 ns (8 points), ts_over_sigma
/// 0.5..3.0 (11 points), delta_1/delta_2 -2pi*10..+2pi*10 MHz (21 points).
std::vector<double> default_axis_values(const std::string& axis_name);

/// All defaults: the Table-I operating point, the standard Gaussian schedule
/// (25.5 MHz peaks, t_s=-30 ns, sigma=20 ns), resonant drive without CD,
/// table-derived rates, window [-100,100] ns at dt=0.01 ns.
ToolConfig default_config();

/// Strict INI-style parser: `[section]` headers and `key = value` lines, `#`
/// comments. Sections: system, pulses, drive, integrator, sweep. Frequencies
/// are plain nu-values with unit-bearing key names (omega_q_ghz, kappa_mhz,
/// delta_1_mhz, ...) and are converted to angular rad/ns here. Unknown
/// sections, unknown keys and duplicate keys are hard errors naming the key
/// and line.
ToolConfig parse_config_file(const std::string& path);

/// Same parser over an in-memory string (used by tests).
ToolConfig parse_config_text(const std::string& text, const std::string& origin = "<string>");

/// Echo of the effective configuration as (key, value-string) pairs in config
/// units, used for the run summary.
std::vector<std::pair<std::string, std::string>> config_echo(const ToolConfig& cfg);

}  // namespace polsim
