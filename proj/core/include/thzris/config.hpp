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
#include <stdexcept>
#include <string>
#include <vector>

namespace thzris {

/// Raised for inconsistent system parameters or malformed scenario input.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raw parameter set. Field names match the scenario file keys.
struct SystemParams {
  std::size_t n_tx = 256;           // BS antennas
  std::size_t n_rx = 64;            // UE antennas
  std::size_t n_rf = 1;             // RF chains
  std::size_t n_streams = 1;        // data streams
  std::size_t k_t = 16;             // time delayers per RF chain
  std::size_t f_ris = 64;           // RIS unit cells (square)
  std::size_t m_subcarriers = 128;  // OFDM subcarriers
  double bandwidth_hz = 30e9;
  double f_center_hz = 300e9;
  double p_total = 1.0;
  double light_speed = 299792458.0;
};

/// Validated system configuration. Immutable once constructed.
///
/// Invariants checked at construction:
///   * every count and every physical scalar is positive;
///   * k_t divides n_tx (integral phase-shifter subarray size);
///   * f_ris is a perfect square (square RIS);
///   * bandwidth_hz < 2 * f_center_hz (every subcarrier frequency positive);
///   * n_streams <= n_rf <= n_tx.
/// Violations throw ConfigError naming the broken invariant.
class SystemConfig {
 public:
  SystemConfig() : SystemConfig(SystemParams{}) {}
  explicit SystemConfig(const SystemParams& params);

  const SystemParams& params() const noexcept { return p_; }

  std::size_t n_tx() const noexcept { return p_.n_tx; }
  std::size_t n_rx() const noexcept { return p_.n_rx; }
  std::size_t n_rf() const noexcept { return p_.n_rf; }
  std::size_t n_streams() const noexcept { return p_.n_streams; }
  std::size_t k_t() const noexcept { return p_.k_t; }
  std::size_t f_ris() const noexcept { return p_.f_ris; }
  std::size_t m_subcarriers() const noexcept { return p_.m_subcarriers; }
  double bandwidth_hz() const noexcept { return p_.bandwidth_hz; }
  double f_center_hz() const noexcept { return p_.f_center_hz; }
  double p_total() const noexcept { return p_.p_total; }
  double light_speed() const noexcept { return p_.light_speed; }

  /// Phase shifters per time delayer, N_TX / K_T.
  std::size_t p_sub() const noexcept { return p_.n_tx / p_.k_t; }
  /// Side length of the square RIS, sqrt(F).
  std::size_t ris_side() const noexcept { return ris_side_; }
  /// Carrier wavelength c / f_c.
  double lambda_c() const noexcept { return p_.light_speed / p_.f_center_hz; }
  /// Half-wavelength element spacing c / (2 f_c).
  double d_spacing() const noexcept { return 0.5 * lambda_c(); }

  /// Copy with a different number of time delayers; revalidates.
  SystemConfig with_k_t(std::size_t k_t) const;
  /// Copy with a different subcarrier count; revalidates.
  SystemConfig with_subcarriers(std::size_t m) const;

 private:
  SystemParams p_;
  std::size_t ris_side_ = 0;
};

/// Subcarrier centre frequencies f_1 < ... < f_M, spaced B / M and symmetric about f_c.
struct FrequencyGrid {
  std::vector<double> frequencies_hz;

  std::size_t size() const noexcept { return frequencies_hz.size(); }
  double operator[](std::size_t i) const { return frequencies_hz[i]; }
};

/// f_m = f_c + B (2m - 1 - M) / (2M), m = 1..M.
FrequencyGrid build_frequency_grid(const SystemConfig& cfg);
/// Same law for explicit parameters; throws ConfigError for M = 0 or a non-positive frequency.
FrequencyGrid build_frequency_grid(double f_center_hz, double bandwidth_hz, std::size_t m);

}  // namespace thzris
