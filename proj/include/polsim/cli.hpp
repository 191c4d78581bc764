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

#include <string>

namespace polsim {

/// Options shared by the table/run/sweep commands. An empty config_path means
/// all-defaults. Runs are seedless and deterministic: identical options
/// produce bit-identical output files.
struct CliOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::string metric_override;  ///< sweep only; empty = take [sweep] metric
  int threads = 1;              ///< sweep only
};

/// Writes <out>/table1_comparison.csv. Exit 0 iff every comparison row passes,
/// the basis is nested and the truncation convergence check holds; on a
/// nesting failure the report is still written.
int cmd_table(const CliOptions& opt);

/// Writes <out>/populations.csv and <out>/summary.csv. Integrator divergence
/// exits nonzero with the diagnostics recorded in summary.csv.
int cmd_run(const CliOptions& opt);

/// Writes <out>/sweep.csv, one row per cell in lexicographic (axis1, axis2)
/// order. Failed cells hold the -1 sentinel and make the exit code nonzero.
int cmd_sweep(const CliOptions& opt);

}  // namespace polsim
