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

#include <cstdio>
#include <exception>

#include <CLI11.hpp>

#include "polsim/cli.hpp"
#include "polsim/config.hpp"
#include "polsim/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"polsim — dressed-state Lambda-system STIRAP/saSTIRAP simulator for a driven "
               "transmon-cavity circuit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", polsim::kVersion);

  polsim::CliOptions opt;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opt.config_path, "config file (omit for built-in defaults)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", opt.out_dir, "output directory (created if missing)")
        ->capture_default_str();
  };

  CLI::App* table = app.add_subcommand(
      "table", "compute the Lambda-system transition table and compare to the reference values");
  add_common(table);

  CLI::App* run =
      app.add_subcommand("run", "run one STIRAP/saSTIRAP protocol and write population traces");
  add_common(run);

  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a metric over a 2-D parameter grid");
  add_common(sweep);
  sweep->add_option("--metric", opt.metric_override, "final_p2, max_p2 or fidelity")
      ->check(CLI::IsMember({"final_p2", "max_p2", "fidelity"}));
  sweep->add_option("--threads", opt.threads, "worker threads for sweep cells")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (table->parsed()) return polsim::cmd_table(opt);
    if (run->parsed()) return polsim::cmd_run(opt);
    if (sweep->parsed()) return polsim::cmd_sweep(opt);
  } catch (const polsim::ConfigError& err) {
    std::fprintf(stderr, "config error: %s\n", err.what());
    return 2;
  } catch (const std::invalid_argument& err) {
    std::fprintf(stderr, "invalid input: %s\n", err.what());
    return 2;
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 1;
  }
  return 2;
}
