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

#include "thzris/manifold.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace thzris {

PhysicalDirection1D::PhysicalDirection1D(double value) : value_(value) {
  if (!(std::abs(value) <= 1.0)) {
    throw std::invalid_argument("physical direction must lie in [-1, 1]");
  }
}

PhysicalDirection2D::PhysicalDirection2D(double azimuth_sin, double elevation_sin)
    : PhysicalDirection2D(azimuth_sin, elevation_sin,
                          std::sqrt(std::max(0.0, 1.0 - elevation_sin * elevation_sin))) {}

PhysicalDirection2D::PhysicalDirection2D(double azimuth_sin, double elevation_sin,
                                         double elevation_cos)
    : azimuth_sin_(azimuth_sin), elevation_sin_(elevation_sin), elevation_cos_(elevation_cos) {
  if (!(std::abs(azimuth_sin) <= 1.0) || !(std::abs(elevation_sin) <= 1.0) ||
      !(std::abs(elevation_cos) <= 1.0)) {
    throw std::invalid_argument("planar direction components must lie in [-1, 1]");
  }
  const double unit = elevation_sin * elevation_sin + elevation_cos * elevation_cos;
  if (std::abs(unit - 1.0) > 1e-12) {
    throw std::invalid_argument("elevation sine and cosine are inconsistent");
  }
}

cplx SteeringVector::project(const CVector& weights) const {
  if (weights.size() != entries.size()) {
    throw std::invalid_argument("steering vector and weight column differ in length");
  }
  return entries.transpose() * weights;
}

double spatial_from_physical(double dir, double f_m, double f_c) {
  if (!(f_m > 0.0) || !(f_c > 0.0)) throw std::invalid_argument("frequencies must be positive");
  return (f_m / f_c) * dir;
}

SteeringVector ula_steering(PhysicalDirection1D dir, double f_m, const SystemConfig& cfg,
                            std::size_t n) {
  if (n == 0) throw std::invalid_argument("array needs at least one element");
  const double slope = kPi * spatial_from_physical(dir.value(), f_m, cfg.f_center_hz());
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  SteeringVector out;
  out.frequency_hz = f_m;
  out.entries.resize(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    out.entries[static_cast<Eigen::Index>(i)] = std::polar(scale, slope * static_cast<double>(i));
  }
  return out;
}

SteeringVector upa_steering(const PhysicalDirection2D& dir, double f_m, const SystemConfig& cfg,
                            std::size_t f) {
  const std::size_t side = exact_isqrt(f);
  if (side == 0) throw std::invalid_argument("UPA size must be a perfect square");
  const double ratio = spatial_from_physical(1.0, f_m, cfg.f_center_hz());
  const double row = kPi * ratio * dir.row_slope();
  const double col = kPi * ratio * dir.col_slope();
  const double scale = 1.0 / std::sqrt(static_cast<double>(f));
  SteeringVector out;
  out.frequency_hz = f_m;
  out.entries.resize(static_cast<Eigen::Index>(f));
  for (std::size_t x = 0; x < side; ++x) {
    for (std::size_t y = 0; y < side; ++y) {
      const double phase = row * static_cast<double>(x) + col * static_cast<double>(y);
      out.entries[static_cast<Eigen::Index>(x * side + y)] = std::polar(scale, phase);
    }
  }
  return out;
}

double dirichlet_sinc(std::size_t n, double x) {
  const double nd = static_cast<double>(n);
  const double den = std::sin(0.5 * kPi * x);
  if (std::abs(den) < 1e-9) {
    // x is (numerically) an even integer 2k; the limit is n cos(n pi k) / cos(pi k)
    // = n (-1)^(k (n - 1)).
    const long long k = std::llabs(std::llround(0.5 * x));
    const bool odd = ((k % 2) == 1) && ((n - 1) % 2 == 1);
    return odd ? -nd : nd;
  }
  return std::sin(0.5 * nd * kPi * x) / den;
}

std::size_t exact_isqrt(std::size_t value) noexcept {
  if (value == 0) return 0;
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(value))));
  while (r * r > value) --r;
  while ((r + 1) * (r + 1) <= value) ++r;
  return r * r == value ? r : 0;
}

}  // namespace thzris
