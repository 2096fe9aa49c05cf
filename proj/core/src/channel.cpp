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

#include "thzris/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "thzris/beamforming.hpp"
#include "thzris/ris.hpp"

namespace thzris {

void ChannelSet::validate(const SystemConfig& cfg) const {
  if (bs_ris_paths.empty()) throw ConfigError("channel needs at least one BS-RIS path");
  if (ris_ue_paths.empty()) throw ConfigError("channel needs at least one RIS-UE path");
  for (const auto& p : bs_ris_paths) {
    if (!(std::abs(p.gain) > 0.0)) throw ConfigError("BS-RIS path gain must be non-zero");
  }
  for (const auto& p : ris_ue_paths) {
    if (!(std::abs(p.gain) > 0.0)) throw ConfigError("RIS-UE path gain must be non-zero");
  }
  if (ris_ue_paths.size() > std::min(cfg.n_rx(), cfg.f_ris())) {
    throw ConfigError("RIS-UE path count must not exceed min(n_rx, f_ris)");
  }
}

NoiseSource::NoiseSource(NoiseModel model) : model_(model), engine_(model.seed) {
  if (!(model.variance >= 0.0)) throw std::invalid_argument("noise variance must be non-negative");
}

CVector NoiseSource::draw(std::size_t n) {
  CVector z = CVector::Zero(static_cast<Eigen::Index>(n));
  if (model_.variance == 0.0) return z;
  const double sigma = std::sqrt(0.5 * model_.variance);
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    z[i] = cplx(sigma * re, sigma * im);
  }
  return z;
}

std::vector<cplx> random_unit_gains(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  std::vector<cplx> out(count);
  for (auto& g : out) g = unit_phasor(phase(engine));
  return out;
}

CMatrix bs_ris_channel(const ChannelSet& paths, double f_m, const SystemConfig& cfg) {
  CMatrix g = CMatrix::Zero(static_cast<Eigen::Index>(cfg.f_ris()),
                            static_cast<Eigen::Index>(cfg.n_tx()));
  for (const auto& p : paths.bs_ris_paths) {
    const auto ris = upa_steering(p.arrival, f_m, cfg, cfg.f_ris());
    const auto bs = ula_steering(p.departure, f_m, cfg, cfg.n_tx());
    if (ris.size() != cfg.f_ris() || bs.size() != cfg.n_tx()) {
      throw std::invalid_argument("steering vector size disagrees with config");
    }
    // a_RIS = conj(entries), a_BS^H = entries^T
    g.noalias() += p.gain * ris.column() * bs.entries.transpose();
  }
  return g;
}

CMatrix ris_ue_channel(const ChannelSet& paths, double f_m, const SystemConfig& cfg) {
  CMatrix h = CMatrix::Zero(static_cast<Eigen::Index>(cfg.n_rx()),
                            static_cast<Eigen::Index>(cfg.f_ris()));
  for (const auto& p : paths.ris_ue_paths) {
    const auto ue = ula_steering(p.arrival, f_m, cfg, cfg.n_rx());
    const auto ris = upa_steering(p.departure, f_m, cfg, cfg.f_ris());
    h.noalias() += p.gain * ue.column() * ris.entries.transpose();
  }
  return h;
}

CMatrix default_digital_precoder(const SystemConfig& cfg) {
  const auto n_rf = static_cast<Eigen::Index>(cfg.n_rf());
  const auto n_s = static_cast<Eigen::Index>(cfg.n_streams());
  const double scale =
      std::sqrt(cfg.p_total() / (static_cast<double>(cfg.m_subcarriers()) * static_cast<double>(n_s)));
  CMatrix d = CMatrix::Zero(n_rf, n_s);
  for (Eigen::Index s = 0; s < n_s; ++s) d(s, s) = scale;
  return d;
}

double transmit_power(const CMatrix& tp, const CMatrix& digital) {
  if (tp.cols() != digital.rows()) throw std::invalid_argument("TP and digital precoder mismatch");
  return (tp * digital).squaredNorm();
}

double total_transmit_power(std::span<const CMatrix> tp, std::span<const CMatrix> digital) {
  if (tp.size() != digital.size()) throw std::invalid_argument("precoder lists differ in length");
  double total = 0.0;
  for (std::size_t m = 0; m < tp.size(); ++m) total += transmit_power(tp[m], digital[m]);
  return total;
}

CVector received_signal(const SystemConfig& cfg, const ChannelSet& channels,
                        const RisResponse& ris, const TpBeamformer& bf, const CMatrix& digital,
                        const CVector& s, double f_m, NoiseSource& noise) {
  if (ris.size() != cfg.f_ris()) throw std::invalid_argument("RIS response size mismatch");
  if (bf.psr.n_tx() != cfg.n_tx()) throw std::invalid_argument("beamformer antenna count mismatch");
  if (static_cast<std::size_t>(digital.rows()) != bf.n_rf()) {
    throw std::invalid_argument("digital precoder rows must equal the RF chain count");
  }
  if (digital.cols() != s.size()) throw std::invalid_argument("symbol vector length mismatch");

  const CMatrix tp = tp_response(bf, f_m, cfg);
  const double power = transmit_power(tp, digital);
  if (power > cfg.p_total() * (1.0 + 1e-12)) {
    throw std::domain_error("digital precoder exceeds the transmit power budget (" +
                            std::to_string(power) + " > " + std::to_string(cfg.p_total()) + ")");
  }

  const CMatrix h = ris_ue_channel(channels, f_m, cfg);
  const CMatrix g = bs_ris_channel(channels, f_m, cfg);
  const CVector x = tp * (digital * s);
  const CVector at_ris = ris.coefficients().cwiseProduct(g * x);
  CVector y = h * at_ris;
  y += noise.draw(static_cast<std::size_t>(y.size()));
  return y;
}

}  // namespace thzris
