// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The thzris Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// thzris: figure sweeps and invariant validation for delay-phase beamforming with a RIS.
//
//   thzris fig3a|fig3b|fig4|sweep|validate [--config file.yaml] [--out dir] ...
//
// Exit status: 0 success, 1 validation failure, 2 configuration error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thzris/figures.hpp"
#include "thzris/ris.hpp"
#include "thzris/scenario.hpp"
#include "thzris/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::string config;
  std::string out = ".";
  std::optional<std::size_t> grid_points;
  std::optional<std::size_t> subcarriers;
  std::vector<std::size_t> kt;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;
  std::optional<std::string> select;
  std::optional<double> tolerance;
  bool svg = false;
};

thzris::Scenario build_scenario(const Options& opt) {
  using namespace thzris;
  Scenario s = opt.config.empty() ? parse_scenario("", opt.seed) : load_scenario(opt.config, opt.seed);

  SystemParams p = s.config.params();
  if (opt.subcarriers) p.m_subcarriers = *opt.subcarriers;
  if (!opt.kt.empty()) {
    p.k_t = opt.kt.front();
    s.fig4_kt = opt.kt;
  }
  s.config = SystemConfig(p);
  for (auto k : s.fig4_kt) (void)s.config.with_k_t(k);

  if (opt.grid_points) {
    if (*opt.grid_points == 0) throw ConfigError("--grid-points must be positive");
    s.sweep.grid_points = *opt.grid_points;
  }
  if (opt.mode) {
    const auto arch = parse_architecture(*opt.mode);
    if (!arch) throw ConfigError("unknown --mode '" + *opt.mode + "'");
    s.architecture = *arch;
  }
  if (opt.select) {
    if (*opt.select == "all") {
      s.sweep.selection = SubcarrierSelection::all;
    } else if (*opt.select == "edges") {
      s.sweep.selection = SubcarrierSelection::edges_and_centre;
    } else {
      s.sweep.selection = SubcarrierSelection::explicit_list;
      s.sweep.indices.clear();
      std::stringstream ss(*opt.select);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          s.sweep.indices.push_back(std::stoul(item));
        } catch (const std::exception&) {
          throw ConfigError("--select expects edges, all or a comma separated index list");
        }
      }
    }
    (void)selected_subcarriers(s);
  }
  s.channels.validate(s.config);
  s.outputs.directory = opt.out;
  s.outputs.svg = opt.svg;
  return s;
}

void emit(const thzris::Scenario& s, const thzris::GainTable& table, const std::string& name) {
  std::filesystem::create_directories(s.outputs.directory);
  const auto csv_path = s.outputs.directory / (name + ".csv");
  {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + csv_path.string());
    thzris::write_csv(table, out);
  }
  std::cout << "wrote " << csv_path.string() << " (" << table.rows.size() << " rows)\n";
  if (s.outputs.svg) {
    const auto svg_path = s.outputs.directory / (name + ".svg");
    std::ofstream out(svg_path, std::ios::binary);
    thzris::write_svg(table, out, name);
    std::cout << "wrote " << svg_path.string() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wideband THz delay-phase beamforming and RIS design sweeps"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opt.config, "Scenario YAML file (reference scenario when omitted)");
    cmd->add_option("--out", opt.out, "Output directory")->capture_default_str();
    cmd->add_option("--grid-points", opt.grid_points, "Direction grid size (default 4096)");
    cmd->add_option("--subcarriers", opt.subcarriers, "Number of OFDM subcarriers M (default 128)");
    cmd->add_option("--kt", opt.kt, "Time delayers per RF chain; repeat for the fig4 comparison");
    cmd->add_option("--seed", opt.seed, "Generator seed");
    cmd->add_option("--mode", opt.mode, "conventional | tp-paper-literal | tp-fixed-delay | one-to-one");
    cmd->add_option("--select", opt.select, "Subcarriers to sweep: edges | all | i,j,k (1-based)");
    cmd->add_flag("--svg", opt.svg, "Also write an SVG plot");
  };

  auto* fig3a = app.add_subcommand("fig3a", "Conventional beam pattern across subcarriers");
  auto* fig3b = app.add_subcommand("fig3b", "Delay-phase beam pattern across subcarriers");
  auto* fig4 = app.add_subcommand("fig4", "RIS-side gain versus subcarrier for each K_T");
  auto* sweep = app.add_subcommand("sweep", "Gain at the target direction for every subcarrier");
  auto* check = app.add_subcommand("validate", "Run the invariant suite");
  for (auto* cmd : {fig3a, fig3b, fig4, sweep, check}) add_common(cmd);
  check->add_option("--tolerance", opt.tolerance, "Override every check tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    const auto scenario = build_scenario(opt);
    if (*fig3a) {
      emit(scenario, thzris::run_fig3a(scenario), "fig3a");
    } else if (*fig3b) {
      emit(scenario, thzris::run_fig3b(scenario), "fig3b");
    } else if (*fig4) {
      emit(scenario, thzris::run_fig4(scenario), "fig4");
    } else if (*sweep) {
      emit(scenario, thzris::run_sweep(scenario), "sweep");
    } else if (*check) {
      const auto report = thzris::validate(scenario, opt.tolerance);
      report.print(std::cout);
      return report.passed() ? kExitOk : kExitValidation;
    }
  } catch (const thzris::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const thzris::DesignError& e) {
    std::cerr << "design failure: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}
