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

#include "thzris/config.hpp"
#include "thzris/types.hpp"

namespace thzris {

/// Sine of a real angle, e.g. sin(theta) for a ULA departure direction.
class PhysicalDirection1D {
 public:
  PhysicalDirection1D() = default;
  /// Throws std::invalid_argument if |value| > 1.
  explicit PhysicalDirection1D(double value);

  double value() const noexcept { return value_; }

 private:
  double value_ = 0.0;
};

/// Planar direction for the RIS: sin(phi), sin(psi) and cos(psi).
class PhysicalDirection2D {
 public:
  PhysicalDirection2D() : PhysicalDirection2D(0.0, 0.0) {}
  /// cos(psi) taken as +sqrt(1 - sin(psi)^2).
  PhysicalDirection2D(double azimuth_sin, double elevation_sin);
  /// Explicit cos(psi); sin^2 + cos^2 must equal 1 within 1e-12.
  PhysicalDirection2D(double azimuth_sin, double elevation_sin, double elevation_cos);

  double azimuth_sin() const noexcept { return azimuth_sin_; }
  double elevation_sin() const noexcept { return elevation_sin_; }
  double elevation_cos() const noexcept { return elevation_cos_; }

  /// Phase slope along the x (row) index: sin(phi) sin(psi).
  double row_slope() const noexcept { return azimuth_sin_ * elevation_sin_; }
  /// Phase slope along the y (column) index: cos(psi).
  double col_slope() const noexcept { return elevation_cos_; }

 private:
  double azimuth_sin_ = 0.0;
  double elevation_sin_ = 0.0;
  double elevation_cos_ = 1.0;
};

/// Unit-norm array response at one frequency.
///
/// Convention (fixed for the whole library): `entries` holds h / sqrt(N), the
/// positive-phase vector that the Hermitian-transposed steering vector a^H
/// equals. The steering column a itself is conj(entries), see column().
/// Inner products of the form a^H w are therefore entries.transpose() * w.
struct SteeringVector {
  CVector entries;
  double frequency_hz = 0.0;

  std::size_t size() const noexcept { return static_cast<std::size_t>(entries.size()); }
  /// The steering column a = conj(entries).
  CVector column() const { return entries.conjugate(); }
  /// a^H w for a weight column w of equal length.
  cplx project(const CVector& weights) const;
};

/// Spatial direction (f_m / f_c) * dir. Requires positive frequencies.
double spatial_from_physical(double dir, double f_m, double f_c);

/// ULA response of n elements: entry i has phase pi (f_m/f_c) i dir, magnitude 1/sqrt(n).
SteeringVector ula_steering(PhysicalDirection1D dir, double f_m, const SystemConfig& cfg,
                            std::size_t n);

/// Square UPA response of f cells, flattened row-major (index x * sqrt(f) + y).
/// Entry (x, y) has phase pi (f_m/f_c) (x sin(phi) sin(psi) + y cos(psi)).
/// Throws std::invalid_argument if f is not a perfect square.
SteeringVector upa_steering(const PhysicalDirection2D& dir, double f_m, const SystemConfig& cfg,
                            std::size_t f);

/// Dirichlet sinc sin(n pi x / 2) / sin(pi x / 2).
///
/// At the singular points x = 2k the continuous limit n cos(n pi k) / cos(pi k)
/// is returned, used whenever |sin(pi x / 2)| < 1e-9.
double dirichlet_sinc(std::size_t n, double x);

/// Integer square root if `value` is a perfect square, 0 otherwise.
std::size_t exact_isqrt(std::size_t value) noexcept;

}  // namespace thzris
