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

// Independent reference evaluations for the tests. Everything here is written
// from the raw per-element formulas with explicit loops and never calls into
// the library's numerical code.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using cx = std::complex<double>;
using Vec = std::vector<cx>;
using Mat = std::vector<Vec>;  // row-major

inline constexpr double pi = 3.14159265358979323846;

inline cx expj(double phase) { return {std::cos(phase), std::sin(phase)}; }

/// |sum_{t=0}^{n-1} exp(j t pi x)|
inline double dirichlet_sum(std::size_t n, double x) {
  cx acc = 0.0;
  for (std::size_t t = 0; t < n; ++t) acc += expj(static_cast<double>(t) * pi * x);
  return std::abs(acc);
}

/// Row a^H of a ULA: exp(j pi (f/fc) i dir) / sqrt(n).
inline Vec ula_row(double dir, double f, double fc, std::size_t n) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = expj(pi * f / fc * static_cast<double>(i) * dir) / std::sqrt(double(n));
  return v;
}

/// Row a^H of a square UPA, row-major (x, y).
inline Vec upa_row(double az, double el, double el_cos, double f, double fc, std::size_t cells) {
  const auto side = static_cast<std::size_t>(std::lround(std::sqrt(double(cells))));
  Vec v(cells);
  for (std::size_t x = 0; x < side; ++x)
    for (std::size_t y = 0; y < side; ++y)
      v[x * side + y] = expj(pi * f / fc * (double(x) * az * el + double(y) * el_cos)) / std::sqrt(double(cells));
  return v;
}

inline Vec conj(const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::conj(v[i]);
  return out;
}

/// TP column from the element law exp(-j 2 pi {i dir / 2 + f t_k}) / sqrt(N),
/// t_k = (f/fc - 1) k P dir / (2 f) with 0-based subarray k.
inline Vec tp_column(double dir, double f, double fc, std::size_t n_tx, std::size_t k_t) {
  const std::size_t p = n_tx / k_t;
  Vec v(n_tx);
  for (std::size_t i = 0; i < n_tx; ++i) {
    const double k = double(i / p);
    const double t = (f / fc - 1.0) * k * double(p) * dir / (2.0 * f);
    v[i] = expj(-2.0 * pi * (double(i) * 0.5 * dir + f * t)) / std::sqrt(double(n_tx));
  }
  return v;
}

/// |sum_i row_i col_i|
inline double gain(const Vec& row, const Vec& col) {
  cx acc = 0.0;
  for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * col[i];
  return std::abs(acc);
}

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, Vec(c, 0.0)); }

/// acc += alpha * col * row^T
inline void add_outer(Mat& acc, cx alpha, const Vec& col, const Vec& row) {
  for (std::size_t i = 0; i < col.size(); ++i)
    for (std::size_t j = 0; j < row.size(); ++j) acc[i][j] += alpha * col[i] * row[j];
}

inline Mat matmul(const Mat& a, const Mat& b) {
  Mat c = zeros(a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Vec matvec(const Mat& a, const Vec& x) {
  Vec y(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

}  // namespace oracle
