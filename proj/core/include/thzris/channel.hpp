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
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "thzris/config.hpp"
#include "thzris/manifold.hpp"
#include "thzris/types.hpp"

namespace thzris {

struct RisResponse;
struct TpBeamformer;

/// One propagation ray: complex gain plus departure/arrival directions.
template <class Departure, class Arrival>
struct PathComponent {
  cplx gain{1.0, 0.0};
  Departure departure;
  Arrival arrival;
};

/// BS (ULA) -> RIS (UPA) ray.
using BsRisPath = PathComponent<PhysicalDirection1D, PhysicalDirection2D>;
/// RIS (UPA) -> UE (ULA) ray.
using RisUePath = PathComponent<PhysicalDirection2D, PhysicalDirection1D>;

struct ChannelSet {
  std::vector<BsRisPath> bs_ris_paths;
  std::vector<RisUePath> ris_ue_paths;

  /// Throws ConfigError unless both lists are non-empty, every |gain| > 0 and
  /// L_2 <= min(N_RX, F).
  void validate(const SystemConfig& cfg) const;
};

/// Additive white Gaussian noise; `variance` is E|z|^2 per complex entry.
struct NoiseModel {
  double variance = 0.0;
  std::uint64_t seed = 0;
};

/// Seeded noise stream owned by a single run.
class NoiseSource {
 public:
  explicit NoiseSource(NoiseModel model);

  const NoiseModel& model() const noexcept { return model_; }
  /// n circular complex Gaussian samples; all zeros (and no draw) when variance is 0.
  CVector draw(std::size_t n);

 private:
  NoiseModel model_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Draws unit-magnitude gains with uniform phase from a seeded generator.
std::vector<cplx> random_unit_gains(std::size_t count, std::uint64_t seed);

/// G_m = sum_l alpha_l a_RIS(arrival_l, f_m) a_BS^H(departure_l, f_m), F x N_TX.
CMatrix bs_ris_channel(const ChannelSet& paths, double f_m, const SystemConfig& cfg);

/// H_m = sum_l alpha_l a_UE(arrival_l, f_m) a_RIS^H(departure_l, f_m), N_RX x F.
CMatrix ris_ue_channel(const ChannelSet& paths, double f_m, const SystemConfig& cfg);

/// Default digital precoder: the first N_S columns of I_{N_RF}, scaled so the
/// power summed over all M subcarriers equals P_total for unit-norm TP columns.
CMatrix default_digital_precoder(const SystemConfig& cfg);

/// ||A_m^TP D_m||_F^2 at one subcarrier.
double transmit_power(const CMatrix& tp, const CMatrix& digital);

/// sum_m ||A_m^TP D_m||_F^2. Spans must have equal length.
double total_transmit_power(std::span<const CMatrix> tp, std::span<const CMatrix> digital);

/// y_m = H_m Psi G_m A_m^TP D_m s_m + z_m.
///
/// Throws std::invalid_argument on a dimension mismatch and std::domain_error if the
/// subcarrier alone already exceeds P_total.
CVector received_signal(const SystemConfig& cfg, const ChannelSet& channels,
                        const RisResponse& ris, const TpBeamformer& bf, const CMatrix& digital,
                        const CVector& s, double f_m, NoiseSource& noise);

}  // namespace thzris
