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

#include "thzris/figures.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "thzris/beamforming.hpp"
#include "thzris/channel.hpp"
#include "thzris/ris.hpp"

namespace thzris {

namespace {

// Runs fn(i) for i in [0, n) on a small worker pool. Each index writes only its own
// output slot, so results do not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
}

GainTable direction_sweep(const Scenario& scenario, Architecture arch) {
  const auto& cfg = scenario.config;
  const auto grid = build_frequency_grid(cfg);
  const auto dirs = direction_grid(scenario.sweep.grid_points);
  const auto picks = selected_subcarriers(scenario);
  const auto bf = make_beamformer(scenario.bs_target(), cfg, arch);
  const std::string label(to_string(arch));

  std::vector<std::vector<double>> gains(picks.size());
  parallel_for(picks.size(), [&](std::size_t j) {
    const double f = grid[picks[j]];
    gains[j] = array_factor_sweep(dirs, f, tp_response(bf, f, cfg).col(0), cfg);
  });

  GainTable table;
  table.rows.reserve(picks.size() * dirs.size());
  for (std::size_t j = 0; j < picks.size(); ++j) {
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      table.rows.push_back({picks[j] + 1, grid[picks[j]], dirs[i], label, gains[j][i]});
    }
  }
  return table;
}

}  // namespace

std::vector<double> array_factor_sweep(std::span<const double> dirs, double f_m,
                                       const CVector& weights, const SystemConfig& cfg) {
  const double ratio = f_m / cfg.f_center_hz();
  const double scale = 1.0 / std::sqrt(static_cast<double>(weights.size()));
  std::vector<double> out(dirs.size());
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    const cplx z = unit_phasor(kPi * ratio * dirs[d]);
    // Horner: sum_i w_i z^i
    cplx acc{0.0, 0.0};
    for (Eigen::Index i = weights.size() - 1; i >= 0; --i) acc = acc * z + weights[i];
    out[d] = std::abs(acc) * scale;
  }
  return out;
}

GainTable run_fig3a(const Scenario& scenario) {
  return direction_sweep(scenario, Architecture::conventional);
}

GainTable run_fig3b(const Scenario& scenario) {
  if (scenario.architecture == Architecture::conventional) {
    throw ConfigError("fig3b needs a time-delay architecture, got conventional");
  }
  return direction_sweep(scenario, scenario.architecture);
}

GainTable run_sweep(const Scenario& scenario) {
  const auto& cfg = scenario.config;
  const auto grid = build_frequency_grid(cfg);
  const auto target = scenario.bs_target();
  const auto bf = make_beamformer(target, cfg, scenario.architecture);
  const std::string label(to_string(scenario.architecture));

  std::vector<double> gains(grid.size());
  parallel_for(grid.size(), [&](std::size_t m) {
    const double f = grid[m];
    gains[m] = array_factor(ula_steering(target, f, cfg, cfg.n_tx()), tp_response(bf, f, cfg).col(0));
  });

  GainTable table;
  for (std::size_t m = 0; m < grid.size(); ++m) {
    table.rows.push_back({m + 1, grid[m], target.value(), label, gains[m]});
  }
  return table;
}

GainTable run_fig4(const Scenario& scenario) {
  const auto grid = build_frequency_grid(scenario.config);
  const auto target = scenario.bs_target();
  const auto ris_target = scenario.channels.ris_ue_paths.front().departure;

  GainTable table;
  for (const std::size_t k_t : scenario.fig4_kt) {
    const SystemConfig cfg = scenario.config.with_k_t(k_t);
    const auto bf = make_beamformer(target, cfg, scenario.architecture);
    const auto design = ris_exact_solution(scenario.channels, 0, cfg);
    const std::string label = std::string(to_string(scenario.architecture)) + "/kt" + std::to_string(k_t);

    std::vector<double> gains(grid.size());
    parallel_for(grid.size(), [&](std::size_t m) {
      const double f = grid[m];
      const auto eq = equivalent_channel(bs_ris_channel(scenario.channels, f, cfg), tp_response(bf, f, cfg));
      gains[m] = ris_side_gain(design.response, eq, ris_target, f, 0, cfg);
    });
    for (std::size_t m = 0; m < grid.size(); ++m) {
      table.rows.push_back({m + 1, grid[m], std::nullopt, label, gains[m]});
    }
  }
  return table;
}

}  // namespace thzris
