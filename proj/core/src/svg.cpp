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

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "thzris/figures.hpp"

namespace thzris {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kMargin = 56.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void write_svg(const GainTable& table, std::ostream& out, const std::string& title) {
  // Series keyed by architecture, plus subcarrier for direction sweeps.
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  bool by_direction = false;
  for (const auto& row : table.rows) {
    if (row.direction) {
      by_direction = true;
      series[row.architecture + " m=" + std::to_string(row.subcarrier_index)].emplace_back(
          *row.direction, row.gain);
    } else {
      series[row.architecture].emplace_back(row.frequency_hz * 1e-9, row.gain);
    }
  }

  double x_lo = by_direction ? -1.0 : 0.0;
  double x_hi = by_direction ? 1.0 : 1.0;
  if (!by_direction && !table.rows.empty()) {
    x_lo = x_hi = table.rows.front().frequency_hz * 1e-9;
    for (const auto& row : table.rows) {
      x_lo = std::min(x_lo, row.frequency_hz * 1e-9);
      x_hi = std::max(x_hi, row.frequency_hz * 1e-9);
    }
    if (x_hi == x_lo) x_hi = x_lo + 1.0;
  }
  const double y_lo = 0.0;
  const double y_hi = 1.0;
  auto px = [&](double x) { return kMargin + (x - x_lo) / (x_hi - x_lo) * (kWidth - 2 * kMargin); };
  auto py = [&](double y) { return kHeight - kMargin - (y - y_lo) / (y_hi - y_lo) * (kHeight - 2 * kMargin); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\">" << title << "</text>\n";
  out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin
      << "\" height=\"" << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double y = y_lo + (y_hi - y_lo) * t / 4.0;
    out << "<text x=\"" << kMargin - 6 << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">"
        << num(y) << "</text>\n";
    const double x = x_lo + (x_hi - x_lo) * t / 4.0;
    out << "<text x=\"" << num(px(x)) << "\" y=\"" << kHeight - kMargin + 16
        << "\" text-anchor=\"middle\">" << num(x) << "</text>\n";
  }
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 12 << "\" text-anchor=\"middle\">"
      << (by_direction ? "physical direction" : "frequency (GHz)") << "</text>\n";
  out << "<text x=\"14\" y=\"" << kHeight / 2 << "\" transform=\"rotate(-90 14 " << kHeight / 2
      << ")\" text-anchor=\"middle\">normalized array gain</text>\n";

  std::size_t colour = 0;
  for (const auto& [name, points] : series) {
    const char* stroke = kPalette[colour % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.2\" points=\"";
    for (const auto& [x, y] : points) out << num(px(x)) << ',' << num(py(std::clamp(y, y_lo, y_hi))) << ' ';
    out << "\"/>\n";
    out << "<text x=\"" << kWidth - kMargin - 4 << "\" y=\"" << kMargin + 16 + 14.0 * colour
        << "\" text-anchor=\"end\" fill=\"" << stroke << "\">" << name << "</text>\n";
    ++colour;
  }
  out << "</svg>\n";
}

}  // namespace thzris
