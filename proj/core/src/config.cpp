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

#include "thzris/config.hpp"

#include <cmath>
#include <string>

#include "thzris/manifold.hpp"

namespace thzris {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError("invalid system config: " + what);
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

SystemConfig::SystemConfig(const SystemParams& params) : p_(params) {
  require(p_.n_tx > 0, "n_tx must be positive");
  require(p_.n_rx > 0, "n_rx must be positive");
  require(p_.n_rf > 0, "n_rf must be positive");
  require(p_.n_streams > 0, "n_streams must be positive");
  require(p_.k_t > 0, "k_t must be positive");
  require(p_.f_ris > 0, "f_ris must be positive");
  require(p_.m_subcarriers > 0, "m_subcarriers must be positive");
  require(positive_finite(p_.bandwidth_hz), "bandwidth_hz must be positive");
  require(positive_finite(p_.f_center_hz), "f_center_hz must be positive");
  require(positive_finite(p_.p_total), "p_total must be positive");
  require(positive_finite(p_.light_speed), "light_speed must be positive");

  require(p_.n_tx % p_.k_t == 0, "k_t must divide n_tx (k_t=" + std::to_string(p_.k_t) +
                                     ", n_tx=" + std::to_string(p_.n_tx) + ")");
  ris_side_ = exact_isqrt(p_.f_ris);
  require(ris_side_ != 0, "f_ris must be a perfect square (f_ris=" + std::to_string(p_.f_ris) + ")");
  require(p_.bandwidth_hz < 2.0 * p_.f_center_hz, "bandwidth_hz must be below 2 * f_center_hz");
  require(p_.n_streams <= p_.n_rf, "n_streams must not exceed n_rf");
  require(p_.n_rf <= p_.n_tx, "n_rf must not exceed n_tx");
}

SystemConfig SystemConfig::with_k_t(std::size_t k_t) const {
  SystemParams p = p_;
  p.k_t = k_t;
  return SystemConfig(p);
}

SystemConfig SystemConfig::with_subcarriers(std::size_t m) const {
  SystemParams p = p_;
  p.m_subcarriers = m;
  return SystemConfig(p);
}

FrequencyGrid build_frequency_grid(const SystemConfig& cfg) {
  return build_frequency_grid(cfg.f_center_hz(), cfg.bandwidth_hz(), cfg.m_subcarriers());
}

FrequencyGrid build_frequency_grid(double f_center_hz, double bandwidth_hz, std::size_t m) {
  if (m == 0) throw ConfigError("frequency grid needs at least one subcarrier");
  FrequencyGrid grid;
  grid.frequencies_hz.reserve(m);
  const double two_m = 2.0 * static_cast<double>(m);
  for (std::size_t idx = 1; idx <= m; ++idx) {
    // 2m - 1 - M is an exact small integer in double.
    const double offset = 2.0 * static_cast<double>(idx) - 1.0 - static_cast<double>(m);
    const double f = f_center_hz + bandwidth_hz * offset / two_m;
    if (!(f > 0.0)) throw ConfigError("frequency grid produces a non-positive subcarrier");
    grid.frequencies_hz.push_back(f);
  }
  return grid;
}

}  // namespace thzris
