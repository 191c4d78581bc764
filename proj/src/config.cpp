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

#include "polsim/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "polsim/csv.hpp"

namespace polsim {

namespace {

double ghz_to_rad_ns(double nu) { return kTwoPi * nu; }
double mhz_to_rad_ns(double nu) { return kTwoPi * nu * 1e-3; }
double rad_ns_to_ghz(double w) { return w / kTwoPi; }
double rad_ns_to_mhz(double w) { return w / kTwoPi * 1e3; }

struct RawEntry {
  std::string value;
  int line = 0;
};

using RawSection = std::map<std::string, RawEntry>;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw ConfigError(origin + ":" + std::to_string(line) + ": " + msg);
}

double as_double(const std::string& origin, const std::string& key, const RawEntry& e) {
  try {
    return parse_double(e.value);
  } catch (const std::exception&) {
    fail(origin, e.line, "key '" + key + "': '" + e.value + "' is not a number");
  }
}

int as_int(const std::string& origin, const std::string& key, const RawEntry& e) {
  const double v = as_double(origin, key, e);
  const int i = static_cast<int>(std::lround(v));
  if (v != static_cast<double>(i))
    fail(origin, e.line, "key '" + key + "': '" + e.value + "' is not an integer");
  return i;
}

bool as_bool(const std::string& origin, const std::string& key, const RawEntry& e) {
  if (e.value == "true" || e.value == "1") return true;
  if (e.value == "false" || e.value == "0") return false;
  fail(origin, e.line, "key '" + key + "': expected true/false, got '" + e.value + "'");
}

std::vector<double> as_double_list(const std::string& origin, const std::string& key,
                                   const RawEntry& e) {
  std::vector<double> out;
  std::istringstream in(e.value);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) fail(origin, e.line, "key '" + key + "': empty element in list");
    try {
      out.push_back(parse_double(tok));
    } catch (const std::exception&) {
      fail(origin, e.line, "key '" + key + "': '" + tok + "' is not a number");
    }
  }
  if (out.empty()) fail(origin, e.line, "key '" + key + "': empty axis value list");
  return out;
}

/// Pops `key` from the section if present and applies `set`.
template <typename Setter>
void take(RawSection& sec, const std::string& key, const Setter& set) {
  auto it = sec.find(key);
  if (it == sec.end()) return;
  set(it->second);
  sec.erase(it);
}

void check_no_leftovers(const std::string& origin, const std::string& section,
                        const RawSection& sec) {
  if (sec.empty()) return;
  const auto& [key, entry] = *sec.begin();
  fail(origin, entry.line, "unknown key '" + key + "' in section [" + section + "]");
}

}  // namespace

std::vector<double> default_axis_values(const std::string& axis_name) {
  std::vector<double> v;
  if (axis_name == "sigma") {
    for (int k = 0; k < 8; ++k) v.push_back(5.0 + 5.0 * k);  // 5..40 ns
  } else if (axis_name == "ts_over_sigma") {
    for (int k = 0; k < 11; ++k) v.push_back(0.5 + 0.25 * k);  // 0.5..3.0
  } else if (axis_name == "delta_1" || axis_name == "delta_2") {
    for (int k = -10; k <= 10; ++k) v.push_back(mhz_to_rad_ns(static_cast<double>(k)));
  } else {
    throw ConfigError("unknown sweep axis '" + axis_name +
                      "' (expected sigma, ts_over_sigma, delta_1 or delta_2)");
  }
  return v;
}

ToolConfig default_config() {
  ToolConfig cfg;  // struct defaults are the standard operating point
  cfg.sweep.axis1 = {"delta_1", default_axis_values("delta_1")};
  cfg.sweep.axis2 = {"delta_2", default_axis_values("delta_2")};
  return cfg;
}

ToolConfig parse_config_text(const std::string& text, const std::string& origin) {
  static const std::set<std::string> known_sections = {"system", "pulses", "drive", "integrator",
                                                       "sweep"};
  std::map<std::string, RawSection> sections;
  std::istringstream in(text);
  std::string line;
  std::string current;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(origin, line_no, "malformed section header '" + line + "'");
      current = trim(line.substr(1, line.size() - 2));
      if (!known_sections.count(current))
        fail(origin, line_no, "unknown section [" + current + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(origin, line_no, "expected 'key = value', got '" + line + "'");
    if (current.empty()) fail(origin, line_no, "key outside of any [section]");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(origin, line_no, "empty key");
    if (value.empty()) fail(origin, line_no, "key '" + key + "' has no value");
    auto [it, inserted] = sections[current].emplace(key, RawEntry{value, line_no});
    if (!inserted)
      fail(origin, line_no,
           "duplicate key '" + key + "' (first at line " + std::to_string(it->second.line) + ")");
  }

  ToolConfig cfg = default_config();
  ProtocolConfig& p = cfg.protocol;

  RawSection& sys = sections["system"];
  take(sys, "omega_q_ghz", [&](const RawEntry& e) { p.system.omega_q = ghz_to_rad_ns(as_double(origin, "omega_q_ghz", e)); });
  take(sys, "omega_r_ghz", [&](const RawEntry& e) { p.system.omega_r = ghz_to_rad_ns(as_double(origin, "omega_r_ghz", e)); });
  take(sys, "omega_d_ghz", [&](const RawEntry& e) { p.system.omega_d = ghz_to_rad_ns(as_double(origin, "omega_d_ghz", e)); });
  take(sys, "g_ghz", [&](const RawEntry& e) { p.system.g = ghz_to_rad_ns(as_double(origin, "g_ghz", e)); });
  take(sys, "omega_drive_mhz", [&](const RawEntry& e) { p.system.omega_drive = mhz_to_rad_ns(as_double(origin, "omega_drive_mhz", e)); });
  take(sys, "kappa_mhz", [&](const RawEntry& e) { p.system.kappa = mhz_to_rad_ns(as_double(origin, "kappa_mhz", e)); });
  take(sys, "gamma_q_mhz", [&](const RawEntry& e) { p.system.gamma_q = mhz_to_rad_ns(as_double(origin, "gamma_q_mhz", e)); });
  take(sys, "n_max", [&](const RawEntry& e) { p.system.n_max = as_int(origin, "n_max", e); });
  check_no_leftovers(origin, "system", sys);

  RawSection& pul = sections["pulses"];
  take(pul, "omega_p_mhz", [&](const RawEntry& e) { p.schedule.omega_p = mhz_to_rad_ns(as_double(origin, "omega_p_mhz", e)); });
  take(pul, "omega_s_mhz", [&](const RawEntry& e) { p.schedule.omega_s = mhz_to_rad_ns(as_double(origin, "omega_s_mhz", e)); });
  take(pul, "t_s_ns", [&](const RawEntry& e) { p.schedule.t_s = as_double(origin, "t_s_ns", e); });
  take(pul, "sigma_ns", [&](const RawEntry& e) { p.schedule.sigma = as_double(origin, "sigma_ns", e); });
  check_no_leftovers(origin, "pulses", pul);

  RawSection& drv = sections["drive"];
  take(drv, "delta_1_mhz", [&](const RawEntry& e) { p.drive.delta_1 = mhz_to_rad_ns(as_double(origin, "delta_1_mhz", e)); });
  take(drv, "delta_2_mhz", [&](const RawEntry& e) { p.drive.delta_2 = mhz_to_rad_ns(as_double(origin, "delta_2_mhz", e)); });
  take(drv, "cd_enabled", [&](const RawEntry& e) { p.drive.cd_enabled = as_bool(origin, "cd_enabled", e); });
  take(drv, "cd_scale", [&](const RawEntry& e) { p.drive.cd_scale = as_double(origin, "cd_scale", e); });
  take(drv, "rates_source", [&](const RawEntry& e) {
    if (e.value == "table") p.rates_source = RatesSource::table_derived;
    else if (e.value == "manual") p.rates_source = RatesSource::manual;
    else fail(origin, e.line, "key 'rates_source': expected table or manual, got '" + e.value + "'");
  });
  take(drv, "decay_override", [&](const RawEntry& e) {
    if (e.value == "zero") p.zero_decay = true;
    else if (e.value == "none") p.zero_decay = false;
    else fail(origin, e.line, "key 'decay_override': expected none or zero, got '" + e.value + "'");
  });
  take(drv, "gamma_31_mhz", [&](const RawEntry& e) { p.manual_gamma_31 = mhz_to_rad_ns(as_double(origin, "gamma_31_mhz", e)); });
  take(drv, "gamma_32_mhz", [&](const RawEntry& e) { p.manual_gamma_32 = mhz_to_rad_ns(as_double(origin, "gamma_32_mhz", e)); });
  take(drv, "gamma_21_mhz", [&](const RawEntry& e) { p.manual_gamma_21 = mhz_to_rad_ns(as_double(origin, "gamma_21_mhz", e)); });
  check_no_leftovers(origin, "drive", drv);

  RawSection& intg = sections["integrator"];
  take(intg, "t0_ns", [&](const RawEntry& e) { p.integrator.t0 = as_double(origin, "t0_ns", e); });
  take(intg, "tf_ns", [&](const RawEntry& e) { p.integrator.tf = as_double(origin, "tf_ns", e); });
  take(intg, "dt_ns", [&](const RawEntry& e) { p.integrator.dt = as_double(origin, "dt_ns", e); });
  take(intg, "store_states", [&](const RawEntry& e) { p.integrator.store_states = as_bool(origin, "store_states", e); });
  check_no_leftovers(origin, "integrator", intg);

  RawSection& swp = sections["sweep"];
  std::string axis1_name = cfg.sweep.axis1.name;
  std::string axis2_name = cfg.sweep.axis2.name;
  bool axis1_values_given = false, axis2_values_given = false;
  std::vector<double> axis1_raw, axis2_raw;
  take(swp, "axis1", [&](const RawEntry& e) { axis1_name = e.value; });
  take(swp, "axis2", [&](const RawEntry& e) { axis2_name = e.value; });
  take(swp, "axis1_values", [&](const RawEntry& e) {
    axis1_raw = as_double_list(origin, "axis1_values", e);
    axis1_values_given = true;
  });
  take(swp, "axis2_values", [&](const RawEntry& e) {
    axis2_raw = as_double_list(origin, "axis2_values", e);
    axis2_values_given = true;
  });
  take(swp, "metric", [&](const RawEntry& e) {
    try {
      cfg.sweep.metric = sweep_metric_from_string(e.value);
    } catch (const std::exception& ex) {
      fail(origin, e.line, ex.what());
    }
  });
  check_no_leftovers(origin, "sweep", swp);

  // Axis value lists arrive in config units (ns, plain ratio, MHz); detuning
  // axes convert to rad/ns here.
  const auto finalize_axis = [&](const std::string& name, bool given,
                                 std::vector<double>& raw) -> SweepAxis {
    SweepAxis axis;
    axis.name = name;
    if (!given) {
      axis.values = default_axis_values(name);  // validates the name too
      return axis;
    }
    default_axis_values(name);  // name check
    const bool is_detuning = (name == "delta_1" || name == "delta_2");
    for (double v : raw) axis.values.push_back(is_detuning ? mhz_to_rad_ns(v) : v);
    return axis;
  };
  cfg.sweep.axis1 = finalize_axis(axis1_name, axis1_values_given, axis1_raw);
  cfg.sweep.axis2 = finalize_axis(axis2_name, axis2_values_given, axis2_raw);

  try {
    p.validate();
  } catch (const std::exception& ex) {
    throw ConfigError(origin + ": invalid configuration: " + ex.what());
  }
  return cfg;
}

ToolConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

std::vector<std::pair<std::string, std::string>> config_echo(const ToolConfig& cfg) {
  const ProtocolConfig& p = cfg.protocol;
  std::vector<std::pair<std::string, std::string>> kv;
  const auto num = [](double v) { return format_double(v); };
  kv.emplace_back("system.omega_q_ghz", num(rad_ns_to_ghz(p.system.omega_q)));
  kv.emplace_back("system.omega_r_ghz", num(rad_ns_to_ghz(p.system.omega_r)));
  kv.emplace_back("system.omega_d_ghz", num(rad_ns_to_ghz(p.system.omega_d)));
  kv.emplace_back("system.g_ghz", num(rad_ns_to_ghz(p.system.g)));
  kv.emplace_back("system.omega_drive_mhz", num(rad_ns_to_mhz(p.system.omega_drive)));
  kv.emplace_back("system.kappa_mhz", num(rad_ns_to_mhz(p.system.kappa)));
  kv.emplace_back("system.gamma_q_mhz", num(rad_ns_to_mhz(p.system.gamma_q)));
  kv.emplace_back("system.n_max", std::to_string(p.system.n_max));
  kv.emplace_back("pulses.omega_p_mhz", num(rad_ns_to_mhz(p.schedule.omega_p)));
  kv.emplace_back("pulses.omega_s_mhz", num(rad_ns_to_mhz(p.schedule.omega_s)));
  kv.emplace_back("pulses.t_s_ns", num(p.schedule.t_s));
  kv.emplace_back("pulses.sigma_ns", num(p.schedule.sigma));
  kv.emplace_back("drive.delta_1_mhz", num(rad_ns_to_mhz(p.drive.delta_1)));
  kv.emplace_back("drive.delta_2_mhz", num(rad_ns_to_mhz(p.drive.delta_2)));
  kv.emplace_back("drive.cd_enabled", p.drive.cd_enabled ? "true" : "false");
  kv.emplace_back("drive.cd_scale", num(p.drive.cd_scale));
  kv.emplace_back("drive.rates_source",
                  p.rates_source == RatesSource::table_derived ? "table" : "manual");
  kv.emplace_back("drive.decay_override", p.zero_decay ? "zero" : "none");
  kv.emplace_back("integrator.t0_ns", num(p.integrator.t0));
  kv.emplace_back("integrator.tf_ns", num(p.integrator.tf));
  kv.emplace_back("integrator.dt_ns", num(p.integrator.dt));
  kv.emplace_back("integrator.store_states", p.integrator.store_states ? "true" : "false");
  return kv;
}

}  // namespace polsim
