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

#include <cmath>
#include <cstdio>
#include <string>

#include "thzris/figures.hpp"

namespace thzris {

std::string format_decimal(double value) {
  if (value == 0.0 || !std::isfinite(value)) return value == 0.0 ? "0" : std::to_string(value);
  constexpr int kDigits = 12;
  int exponent = static_cast<int>(std::floor(std::log10(std::abs(value))));
  int decimals = std::max(0, kDigits - 1 - exponent);
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

void write_csv(const GainTable& table, std::ostream& out) {
  out << "subcarrier_index,frequency_hz,direction_or_na,architecture,gain\n";
  for (const auto& row : table.rows) {
    out << row.subcarrier_index << ',' << format_decimal(row.frequency_hz) << ','
        << (row.direction ? format_decimal(*row.direction) : std::string("na")) << ','
        << row.architecture << ',' << format_decimal(row.gain) << '\n';
  }
}

}  // namespace thzris
