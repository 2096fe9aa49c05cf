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
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "thzris/scenario.hpp"

namespace thzris {

struct GainRow {
  std::size_t subcarrier_index = 0;  // 1-based
  double frequency_hz = 0.0;
  std::optional<double> direction;  // empty when the sample has no direction axis
  std::string architecture;
  double gain = 0.0;
};

struct GainTable {
  std::vector<GainRow> rows;
};

/// |a_BS^H(u, f_m) w| for every u in `dirs`, evaluated as the array polynomial
/// sum_i w_i z^i with z = exp(j pi (f_m/f_c) u).
std::vector<double> array_factor_sweep(std::span<const double> dirs, double f_m,
                                       const CVector& weights, const SystemConfig& cfg);

/// Conventional (PSR-only) beam steered at the scenario target: gain versus
/// direction for the selected subcarriers.
GainTable run_fig3a(const Scenario& scenario);

/// Same sweep for the scenario's TP architecture. Throws ConfigError when the
/// scenario architecture is conventional.
GainTable run_fig3b(const Scenario& scenario);

/// Gain at the target direction for every subcarrier, scenario architecture.
GainTable run_sweep(const Scenario& scenario);

/// RIS-side gain versus subcarrier for each K_T in scenario.fig4_kt, with the RIS
/// designed in closed form at f_c for RIS-UE ray 0.
GainTable run_fig4(const Scenario& scenario);

/// Header `subcarrier_index,frequency_hz,direction_or_na,architecture,gain`.
void write_csv(const GainTable& table, std::ostream& out);
/// Decimal rendering with 12 significant digits and no exponent.
std::string format_decimal(double value);

/// Line plot of every (architecture, subcarrier) series.
void write_svg(const GainTable& table, std::ostream& out, const std::string& title);

}  // namespace thzris
