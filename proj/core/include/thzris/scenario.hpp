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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "thzris/beamforming.hpp"
#include "thzris/channel.hpp"
#include "thzris/config.hpp"

namespace thzris {

enum class SubcarrierSelection {
  edges_and_centre,  // lowest, central and highest subcarrier
  all,
  explicit_list,
};

struct SweepSpec {
  std::size_t grid_points = 4096;  // uniform directions over [-1, 1], endpoints included
  SubcarrierSelection selection = SubcarrierSelection::edges_and_centre;
  std::vector<std::size_t> indices;  // 1-based, used by explicit_list
};

struct OutputSpec {
  std::filesystem::path directory = ".";
  bool svg = false;
};

/// Everything one harness run needs.
///
/// Scenario files are YAML mappings. Top-level keys mirror SystemParams
/// (n_tx, n_rx, n_rf, n_streams, k_t, f_ris, m_subcarriers, bandwidth_hz,
/// f_center_hz, p_total, light_speed) plus:
///   architecture   conventional | tp-paper-literal | tp-fixed-delay | one-to-one
///   grid_points    direction grid size
///   subcarriers    "edges" | "all" | list of 1-based indices
///   fig4_kt        list of delayer counts compared in the RIS-side sweep
///   seed           generator seed (noise and random path gains)
///   noise_variance E|z|^2 per complex entry
///   bs_ris_paths   list of {gain, departure, arrival}
///   ris_ue_paths   list of {gain, departure, arrival}
/// 1-D directions are plain numbers, 2-D directions are mappings with
/// azimuth_sin, elevation_sin and optional elevation_cos. A gain is a number,
/// a [re, im] pair, or the string "random" (unit magnitude, seeded phase).
/// Omitted keys keep the defaults of reference_scenario(); unknown keys are
/// rejected with ConfigError.
struct Scenario {
  SystemConfig config;
  ChannelSet channels;
  SweepSpec sweep;
  Architecture architecture = Architecture::tp_paper_literal;
  std::vector<std::size_t> fig4_kt{16, 32};
  NoiseModel noise;
  OutputSpec outputs;

  /// BS steering target of chain 0, the departure of the first BS-RIS ray.
  PhysicalDirection1D bs_target() const { return channels.bs_ris_paths.front().departure; }
  /// Chain n is steered at BS-RIS ray n mod L_1.
  std::vector<PhysicalDirection1D> chain_targets() const;
};

/// N_TX=256, N_RX=64, B=30 GHz, f_c=300 GHz, K_T=16, F=64, M=128, one LoS ray per hop:
/// BS departure 0.5, RIS arrival (0.4, 0.5), RIS departure (0.5, sqrt(3)/2).
Scenario reference_scenario();

/// `seed_override` replaces the file's seed before any random gain is drawn.
Scenario parse_scenario(std::string_view yaml_text,
                        std::optional<std::uint64_t> seed_override = std::nullopt);
Scenario load_scenario(const std::filesystem::path& path,
                       std::optional<std::uint64_t> seed_override = std::nullopt);

/// `points` uniform samples of [-1, 1]; a single point sits at 0.
std::vector<double> direction_grid(std::size_t points);

/// 0-based subcarrier indices selected by the sweep spec.
std::vector<std::size_t> selected_subcarriers(const Scenario& scenario);

}  // namespace thzris
