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
#include <span>
#include <string_view>
#include <vector>

#include "thzris/config.hpp"
#include "thzris/manifold.hpp"
#include "thzris/types.hpp"

namespace thzris {

/// How the time-delay network is driven.
///
///   paper_literal  per-subcarrier delays t_k = (f_m/f_c - 1)(k-1) P dir / (2 f_m);
///   fixed_delay    frequency-independent delays t_k = (k-1) P dir / (2 f_c), with the
///                  per-subarray constant phase pi (k-1) P dir moved into the phase shifters;
///   one_to_one     one delayer per antenna, t_i = i (f_m/f_c - 1) dir / (2 f_m).
enum class TdMode { paper_literal, fixed_delay, one_to_one };

/// Analog front-end variants compared by the harness.
enum class Architecture { conventional, tp_paper_literal, tp_fixed_delay, one_to_one };

std::string_view to_string(TdMode mode) noexcept;
std::string_view to_string(Architecture arch) noexcept;
/// Accepts "conventional", "tp-paper-literal", "tp-fixed-delay", "one-to-one".
std::optional<Architecture> parse_architecture(std::string_view name) noexcept;
/// TD mode behind an architecture; nullopt for conventional.
std::optional<TdMode> td_mode_of(Architecture arch) noexcept;

/// Frequency-independent phase-shifter network A for all RF chains.
///
/// `phases(i, n)` is the steering phase compensated at antenna i for chain n; the
/// applied weight is exp(-j phases(i, n)) / sqrt(N_TX). Antennas are grouped into
/// `subarrays` consecutive blocks of `subarray_size`, block k fed by delayer k.
struct PsrBeamformer {
  Eigen::MatrixXd phases;  // N_TX x N_RF
  std::size_t subarrays = 1;
  std::size_t subarray_size = 1;

  std::size_t n_tx() const noexcept { return static_cast<std::size_t>(phases.rows()); }
  std::size_t n_rf() const noexcept { return static_cast<std::size_t>(phases.cols()); }

  /// Per-chain weight columns, N_TX x N_RF.
  CMatrix weights() const;
  /// Full block matrix A = [A_1 ... A_NRF], A_n = blkdiag(a_PS,n,1 ... a_PS,n,K), N_TX x K N_RF.
  CMatrix block_matrix() const;
};

/// Signed delays in seconds for the delayers of one RF chain.
struct TdVector {
  std::vector<double> delays;
  TdMode mode = TdMode::paper_literal;
};

/// Cascaded delay-then-phase beamformer. A conventional (PSR-only) front end is
/// represented by mode == nullopt, i.e. all delays zero.
struct TpBeamformer {
  PsrBeamformer psr;
  std::vector<PhysicalDirection1D> targets;  // one per RF chain
  std::optional<TdMode> mode;

  std::size_t n_rf() const noexcept { return targets.size(); }
  /// Delay vectors of every chain at subcarrier f_m.
  std::vector<TdVector> delays_at(double f_m, const SystemConfig& cfg) const;
};

/// Conventional phase shifters for one chain: element (k, p) compensates
/// pi [(k-1)P + p - 1] dir, i.e. the full-array conjugate match at f_c.
PsrBeamformer conventional_psr(PhysicalDirection1D dir, const SystemConfig& cfg);
/// One chain per direction.
PsrBeamformer conventional_psr(std::span<const PhysicalDirection1D> dirs, const SystemConfig& cfg);

/// Delays of one chain steered to `dir`, evaluated at f_m.
TdVector compute_time_delays(PhysicalDirection1D dir, double f_m, const SystemConfig& cfg,
                             TdMode mode);

/// Builds the phase-shifter layer and delay law for each chain. The fixed-delay
/// mode folds its constant per-subarray phase into the phase shifters; one-to-one
/// uses single-antenna subarrays regardless of cfg.k_t().
TpBeamformer make_tp_beamformer(std::span<const PhysicalDirection1D> dirs,
                                const SystemConfig& cfg, std::optional<TdMode> mode);
TpBeamformer make_tp_beamformer(PhysicalDirection1D dir, const SystemConfig& cfg,
                                std::optional<TdMode> mode);
TpBeamformer make_beamformer(PhysicalDirection1D dir, const SystemConfig& cfg, Architecture arch);

/// Delay-network response Lambda_m = blkdiag(exp(-j 2 pi f_m t_n)), (K N_RF) x N_RF.
CMatrix delay_response(const TpBeamformer& bf, double f_m, const SystemConfig& cfg);

/// A_m^TP = A Lambda_m, N_TX x N_RF; every entry has magnitude 1/sqrt(N_TX).
CMatrix tp_response(const TpBeamformer& bf, double f_m, const SystemConfig& cfg);

/// |a^H w|. Throws std::invalid_argument on a length mismatch.
double array_factor(const SteeringVector& steer, const CVector& bf_column);

/// Direction at which a PSR-only beam steered to `dir` peaks at f_m: (f_c / f_m) dir.
double beam_split_direction(PhysicalDirection1D dir, double f_m, double f_c);

/// Residual TP gain at the target direction, |Xi_P((f_m/f_c - 1) dir)| / P.
double tp_gain_closed_form(PhysicalDirection1D dir, double f_m, const SystemConfig& cfg);

/// 1 - tp_gain_closed_form(): array gain lost at subcarrier f_m.
double gain_loss_closed_form(PhysicalDirection1D dir, double f_m, const SystemConfig& cfg);

/// Array gain of a PSR-only beam steered to `steer_dir`, seen from `look_dir` at f_m:
/// |Xi_N((f_m/f_c) look - steer)| / N.
double conventional_gain_closed_form(PhysicalDirection1D steer_dir, PhysicalDirection1D look_dir,
                                     double f_m, const SystemConfig& cfg);

}  // namespace thzris
