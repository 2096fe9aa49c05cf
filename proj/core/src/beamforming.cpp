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

#include "thzris/beamforming.hpp"

#include <cmath>
#include <stdexcept>

namespace thzris {

std::string_view to_string(TdMode mode) noexcept {
  switch (mode) {
    case TdMode::paper_literal: return "paper-literal";
    case TdMode::fixed_delay: return "fixed-delay";
    case TdMode::one_to_one: return "one-to-one";
  }
  return "unknown";
}

std::string_view to_string(Architecture arch) noexcept {
  switch (arch) {
    case Architecture::conventional: return "conventional";
    case Architecture::tp_paper_literal: return "tp-paper-literal";
    case Architecture::tp_fixed_delay: return "tp-fixed-delay";
    case Architecture::one_to_one: return "one-to-one";
  }
  return "unknown";
}

std::optional<Architecture> parse_architecture(std::string_view name) noexcept {
  for (auto arch : {Architecture::conventional, Architecture::tp_paper_literal,
                    Architecture::tp_fixed_delay, Architecture::one_to_one}) {
    if (to_string(arch) == name) return arch;
  }
  return std::nullopt;
}

std::optional<TdMode> td_mode_of(Architecture arch) noexcept {
  switch (arch) {
    case Architecture::conventional: return std::nullopt;
    case Architecture::tp_paper_literal: return TdMode::paper_literal;
    case Architecture::tp_fixed_delay: return TdMode::fixed_delay;
    case Architecture::one_to_one: return TdMode::one_to_one;
  }
  return std::nullopt;
}

CMatrix PsrBeamformer::weights() const {
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_tx()));
  CMatrix w(phases.rows(), phases.cols());
  for (Eigen::Index n = 0; n < phases.cols(); ++n) {
    for (Eigen::Index i = 0; i < phases.rows(); ++i) w(i, n) = std::polar(scale, -phases(i, n));
  }
  return w;
}

CMatrix PsrBeamformer::block_matrix() const {
  const auto k_total = static_cast<Eigen::Index>(subarrays);
  const auto p = static_cast<Eigen::Index>(subarray_size);
  const CMatrix w = weights();
  CMatrix a = CMatrix::Zero(w.rows(), k_total * w.cols());
  for (Eigen::Index n = 0; n < w.cols(); ++n) {
    for (Eigen::Index k = 0; k < k_total; ++k) {
      a.block(k * p, n * k_total + k, p, 1) = w.block(k * p, n, p, 1);
    }
  }
  return a;
}

std::vector<TdVector> TpBeamformer::delays_at(double f_m, const SystemConfig& cfg) const {
  std::vector<TdVector> out;
  out.reserve(targets.size());
  for (const auto& dir : targets) {
    if (mode) {
      out.push_back(compute_time_delays(dir, f_m, cfg, *mode));
    } else {
      out.push_back(TdVector{std::vector<double>(psr.subarrays, 0.0), TdMode::paper_literal});
    }
  }
  return out;
}

PsrBeamformer conventional_psr(PhysicalDirection1D dir, const SystemConfig& cfg) {
  return conventional_psr(std::span<const PhysicalDirection1D>(&dir, 1), cfg);
}

PsrBeamformer conventional_psr(std::span<const PhysicalDirection1D> dirs, const SystemConfig& cfg) {
  if (dirs.empty()) throw std::invalid_argument("need at least one RF chain direction");
  PsrBeamformer psr;
  psr.subarrays = cfg.k_t();
  psr.subarray_size = cfg.p_sub();
  psr.phases.resize(static_cast<Eigen::Index>(cfg.n_tx()), static_cast<Eigen::Index>(dirs.size()));
  for (std::size_t n = 0; n < dirs.size(); ++n) {
    for (std::size_t i = 0; i < cfg.n_tx(); ++i) {
      // i = (k-1) P + (p-1)
      psr.phases(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n)) =
          kPi * static_cast<double>(i) * dirs[n].value();
    }
  }
  return psr;
}

TdVector compute_time_delays(PhysicalDirection1D dir, double f_m, const SystemConfig& cfg,
                             TdMode mode) {
  if (!(f_m > 0.0)) throw std::invalid_argument("subcarrier frequency must be positive");
  const double f_c = cfg.f_center_hz();
  const double detune = (f_m - f_c) / f_c;  // f_m / f_c - 1
  const double p = static_cast<double>(cfg.p_sub());
  TdVector td;
  td.mode = mode;
  switch (mode) {
    case TdMode::paper_literal:
      td.delays.resize(cfg.k_t());
      for (std::size_t k = 0; k < cfg.k_t(); ++k) {
        td.delays[k] = detune * static_cast<double>(k) * p * dir.value() / (2.0 * f_m);
      }
      break;
    case TdMode::fixed_delay:
      td.delays.resize(cfg.k_t());
      for (std::size_t k = 0; k < cfg.k_t(); ++k) {
        td.delays[k] = static_cast<double>(k) * p * dir.value() / (2.0 * f_c);
      }
      break;
    case TdMode::one_to_one:
      td.delays.resize(cfg.n_tx());
      for (std::size_t i = 0; i < cfg.n_tx(); ++i) {
        td.delays[i] = static_cast<double>(i) * detune * dir.value() / (2.0 * f_m);
      }
      break;
  }
  return td;
}

TpBeamformer make_tp_beamformer(std::span<const PhysicalDirection1D> dirs,
                                const SystemConfig& cfg, std::optional<TdMode> mode) {
  TpBeamformer bf;
  bf.psr = conventional_psr(dirs, cfg);
  bf.targets.assign(dirs.begin(), dirs.end());
  bf.mode = mode;
  if (mode == TdMode::fixed_delay) {
    // Only the intra-subarray progression pi (p-1) dir stays in the phase shifters.
    const auto p = static_cast<Eigen::Index>(cfg.p_sub());
    for (Eigen::Index n = 0; n < bf.psr.phases.cols(); ++n) {
      for (Eigen::Index i = 0; i < bf.psr.phases.rows(); ++i) {
        bf.psr.phases(i, n) = kPi * static_cast<double>(i % p) * dirs[static_cast<std::size_t>(n)].value();
      }
    }
  } else if (mode == TdMode::one_to_one) {
    bf.psr.subarrays = cfg.n_tx();
    bf.psr.subarray_size = 1;
  }
  return bf;
}

TpBeamformer make_tp_beamformer(PhysicalDirection1D dir, const SystemConfig& cfg,
                                std::optional<TdMode> mode) {
  return make_tp_beamformer(std::span<const PhysicalDirection1D>(&dir, 1), cfg, mode);
}

TpBeamformer make_beamformer(PhysicalDirection1D dir, const SystemConfig& cfg, Architecture arch) {
  return make_tp_beamformer(dir, cfg, td_mode_of(arch));
}

CMatrix delay_response(const TpBeamformer& bf, double f_m, const SystemConfig& cfg) {
  const auto delays = bf.delays_at(f_m, cfg);
  const auto k_total = static_cast<Eigen::Index>(bf.psr.subarrays);
  const auto n_rf = static_cast<Eigen::Index>(delays.size());
  CMatrix lambda = CMatrix::Zero(k_total * n_rf, n_rf);
  for (Eigen::Index n = 0; n < n_rf; ++n) {
    const auto& t = delays[static_cast<std::size_t>(n)].delays;
    for (Eigen::Index k = 0; k < k_total; ++k) {
      lambda(n * k_total + k, n) = unit_phasor(-2.0 * kPi * f_m * t[static_cast<std::size_t>(k)]);
    }
  }
  return lambda;
}

CMatrix tp_response(const TpBeamformer& bf, double f_m, const SystemConfig& cfg) {
  if (bf.psr.n_rf() != bf.targets.size()) {
    throw std::invalid_argument("beamformer chain count is inconsistent");
  }
  const auto delays = bf.delays_at(f_m, cfg);
  CMatrix tp = bf.psr.weights();
  const std::size_t p = bf.psr.subarray_size;
  for (Eigen::Index n = 0; n < tp.cols(); ++n) {
    const auto& t = delays[static_cast<std::size_t>(n)].delays;
    for (Eigen::Index i = 0; i < tp.rows(); ++i) {
      const double td = t[static_cast<std::size_t>(i) / p];
      if (td != 0.0) tp(i, n) *= unit_phasor(-2.0 * kPi * f_m * td);
    }
  }
  return tp;
}

double array_factor(const SteeringVector& steer, const CVector& bf_column) {
  return std::abs(steer.project(bf_column));
}

double beam_split_direction(PhysicalDirection1D dir, double f_m, double f_c) {
  if (!(f_m > 0.0) || !(f_c > 0.0)) throw std::invalid_argument("frequencies must be positive");
  return (f_c / f_m) * dir.value();
}

double tp_gain_closed_form(PhysicalDirection1D dir, double f_m, const SystemConfig& cfg) {
  const double detune = (f_m - cfg.f_center_hz()) / cfg.f_center_hz();
  const std::size_t p = cfg.p_sub();
  return std::abs(dirichlet_sinc(p, detune * dir.value())) / static_cast<double>(p);
}

double gain_loss_closed_form(PhysicalDirection1D dir, double f_m, const SystemConfig& cfg) {
  return 1.0 - tp_gain_closed_form(dir, f_m, cfg);
}

double conventional_gain_closed_form(PhysicalDirection1D steer_dir, PhysicalDirection1D look_dir,
                                     double f_m, const SystemConfig& cfg) {
  const double x = spatial_from_physical(look_dir.value(), f_m, cfg.f_center_hz()) - steer_dir.value();
  const std::size_t n = cfg.n_tx();
  return std::abs(dirichlet_sinc(n, x)) / static_cast<double>(n);
}

}  // namespace thzris
