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

#include "thzris/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <yaml-cpp/yaml.h>

namespace thzris {

namespace {

const std::set<std::string> kTopKeys = {
    "n_tx",          "n_rx",         "n_rf",         "n_streams",   "k_t",
    "f_ris",         "m_subcarriers", "bandwidth_hz", "f_center_hz", "p_total",
    "light_speed",   "architecture", "grid_points",  "subcarriers", "fig4_kt",
    "seed",          "noise_variance", "bs_ris_paths", "ris_ue_paths"};

const std::set<std::string> kPathKeys = {"gain", "departure", "arrival"};
const std::set<std::string> kDir2Keys = {"azimuth_sin", "elevation_sin", "elevation_cos"};

[[noreturn]] void fail(const std::string& what) { throw ConfigError("scenario: " + what); }

void reject_unknown(const YAML::Node& map, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.contains(key)) fail("unknown key '" + key + "' in " + where);
  }
}

template <class T>
T scalar(const YAML::Node& node, const std::string& key) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    fail("cannot read '" + key + "'");
  }
}

std::size_t count(const YAML::Node& node, const std::string& key) {
  const auto text = scalar<std::string>(node, key);
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    fail("'" + key + "' must be a non-negative integer");
  }
  return scalar<std::size_t>(node, key);
}

double real(const YAML::Node& node, const std::string& key) {
  const auto v = scalar<double>(node, key);
  if (!std::isfinite(v)) fail("'" + key + "' must be finite");
  return v;
}

PhysicalDirection1D dir1(const YAML::Node& node, const std::string& where) {
  if (!node.IsScalar()) fail(where + " must be a number");
  try {
    return PhysicalDirection1D(real(node, where));
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
}

PhysicalDirection2D dir2(const YAML::Node& node, const std::string& where) {
  if (!node.IsMap()) fail(where + " must be a mapping with azimuth_sin/elevation_sin");
  reject_unknown(node, kDir2Keys, where);
  if (!node["azimuth_sin"] || !node["elevation_sin"]) fail(where + " needs azimuth_sin and elevation_sin");
  const double az = real(node["azimuth_sin"], where + ".azimuth_sin");
  const double el = real(node["elevation_sin"], where + ".elevation_sin");
  try {
    if (node["elevation_cos"]) {
      return PhysicalDirection2D(az, el, real(node["elevation_cos"], where + ".elevation_cos"));
    }
    return PhysicalDirection2D(az, el);
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
}

cplx gain_of(const YAML::Node& node, const std::string& where, std::uint64_t seed,
             std::size_t ordinal) {
  if (!node) return {1.0, 0.0};
  if (node.IsScalar() && node.as<std::string>() == "random") {
    return random_unit_gains(ordinal + 1, seed)[ordinal];
  }
  if (node.IsScalar()) return {real(node, where), 0.0};
  if (node.IsSequence() && node.size() == 2) {
    return {real(node[0], where + "[0]"), real(node[1], where + "[1]")};
  }
  fail(where + " must be a number, [re, im] or \"random\"");
}

template <class Path, class ReadDep, class ReadArr>
std::vector<Path> read_paths(const YAML::Node& list, const std::string& name, std::uint64_t seed,
                             std::size_t& ordinal, ReadDep read_dep, ReadArr read_arr) {
  if (!list.IsSequence() || list.size() == 0) fail("'" + name + "' must be a non-empty list");
  std::vector<Path> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& item = list[i];
    const std::string where = name + "[" + std::to_string(i) + "]";
    if (!item.IsMap()) fail(where + " must be a mapping");
    reject_unknown(item, kPathKeys, where);
    if (!item["departure"] || !item["arrival"]) fail(where + " needs departure and arrival");
    Path p;
    p.gain = gain_of(item["gain"], where + ".gain", seed, ordinal++);
    p.departure = read_dep(item["departure"], where + ".departure");
    p.arrival = read_arr(item["arrival"], where + ".arrival");
    out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<PhysicalDirection1D> Scenario::chain_targets() const {
  std::vector<PhysicalDirection1D> out;
  const auto& paths = channels.bs_ris_paths;
  for (std::size_t n = 0; n < config.n_rf(); ++n) out.push_back(paths[n % paths.size()].departure);
  return out;
}

Scenario reference_scenario() {
  Scenario s;
  s.config = SystemConfig(SystemParams{});
  s.channels.bs_ris_paths = {BsRisPath{{1.0, 0.0}, PhysicalDirection1D(0.5), PhysicalDirection2D(0.4, 0.5)}};
  s.channels.ris_ue_paths = {
      RisUePath{{1.0, 0.0}, PhysicalDirection2D(0.5, std::sqrt(3.0) / 2.0), PhysicalDirection1D(0.0)}};
  return s;
}

Scenario parse_scenario(std::string_view yaml_text, std::optional<std::uint64_t> seed_override) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    fail(std::string("malformed YAML: ") + e.what());
  }
  Scenario s = reference_scenario();
  if (seed_override) s.noise.seed = *seed_override;
  if (root.IsNull()) return s;
  if (!root.IsMap()) fail("top level must be a mapping");
  reject_unknown(root, kTopKeys, "top level");

  SystemParams p = s.config.params();
  auto read_count = [&](const char* key, std::size_t& field) {
    if (root[key]) field = count(root[key], key);
  };
  auto read_real = [&](const char* key, double& field) {
    if (root[key]) field = real(root[key], key);
  };
  read_count("n_tx", p.n_tx);
  read_count("n_rx", p.n_rx);
  read_count("n_rf", p.n_rf);
  read_count("n_streams", p.n_streams);
  read_count("k_t", p.k_t);
  read_count("f_ris", p.f_ris);
  read_count("m_subcarriers", p.m_subcarriers);
  read_real("bandwidth_hz", p.bandwidth_hz);
  read_real("f_center_hz", p.f_center_hz);
  read_real("p_total", p.p_total);
  read_real("light_speed", p.light_speed);
  s.config = SystemConfig(p);

  if (root["architecture"]) {
    const auto name = scalar<std::string>(root["architecture"], "architecture");
    const auto arch = parse_architecture(name);
    if (!arch) fail("unknown architecture '" + name + "'");
    s.architecture = *arch;
  }
  if (root["grid_points"]) s.sweep.grid_points = count(root["grid_points"], "grid_points");
  if (const auto node = root["subcarriers"]) {
    if (node.IsSequence()) {
      s.sweep.selection = SubcarrierSelection::explicit_list;
      s.sweep.indices.clear();
      for (const auto& v : node) s.sweep.indices.push_back(count(v, "subcarriers"));
    } else {
      const auto mode = scalar<std::string>(node, "subcarriers");
      if (mode == "edges") {
        s.sweep.selection = SubcarrierSelection::edges_and_centre;
      } else if (mode == "all") {
        s.sweep.selection = SubcarrierSelection::all;
      } else {
        fail("'subcarriers' must be \"edges\", \"all\" or a list of indices");
      }
    }
  }
  if (const auto node = root["fig4_kt"]) {
    if (!node.IsSequence() || node.size() == 0) fail("'fig4_kt' must be a non-empty list");
    s.fig4_kt.clear();
    for (const auto& v : node) s.fig4_kt.push_back(count(v, "fig4_kt"));
  }
  if (root["seed"] && !seed_override) s.noise.seed = count(root["seed"], "seed");
  if (root["noise_variance"]) {
    s.noise.variance = real(root["noise_variance"], "noise_variance");
    if (s.noise.variance < 0.0) fail("'noise_variance' must be non-negative");
  }

  std::size_t ordinal = 0;
  if (root["bs_ris_paths"]) {
    s.channels.bs_ris_paths =
        read_paths<BsRisPath>(root["bs_ris_paths"], "bs_ris_paths", s.noise.seed, ordinal, dir1, dir2);
  }
  if (root["ris_ue_paths"]) {
    s.channels.ris_ue_paths =
        read_paths<RisUePath>(root["ris_ue_paths"], "ris_ue_paths", s.noise.seed, ordinal, dir2, dir1);
  }

  s.channels.validate(s.config);
  if (s.sweep.grid_points == 0) fail("'grid_points' must be positive");
  for (auto k : s.fig4_kt) (void)s.config.with_k_t(k);
  for (auto idx : s.sweep.indices) {
    if (idx == 0 || idx > s.config.m_subcarriers()) fail("subcarrier index out of range");
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path, std::optional<std::uint64_t> seed_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError("scenario: cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str(), seed_override);
}

std::vector<double> direction_grid(std::size_t points) {
  if (points == 0) return {};
  if (points == 1) return {0.0};
  std::vector<double> grid(points);
  const double step = 2.0 / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = -1.0 + step * static_cast<double>(i);
  grid.back() = 1.0;
  return grid;
}

std::vector<std::size_t> selected_subcarriers(const Scenario& scenario) {
  const std::size_t m = scenario.config.m_subcarriers();
  std::vector<std::size_t> out;
  switch (scenario.sweep.selection) {
    case SubcarrierSelection::all:
      for (std::size_t i = 0; i < m; ++i) out.push_back(i);
      break;
    case SubcarrierSelection::edges_and_centre: {
      // For even M the central entry is the upper of the two middle subcarriers.
      const std::set<std::size_t> picks = {0, m / 2, m - 1};
      out.assign(picks.begin(), picks.end());
      break;
    }
    case SubcarrierSelection::explicit_list:
      for (auto idx : scenario.sweep.indices) {
        if (idx == 0 || idx > m) throw ConfigError("subcarrier index out of range");
        out.push_back(idx - 1);
      }
      break;
  }
  return out;
}

}  // namespace thzris
