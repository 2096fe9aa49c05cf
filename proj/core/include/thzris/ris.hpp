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
#include <stdexcept>
#include <vector>

#include "thzris/channel.hpp"
#include "thzris/config.hpp"
#include "thzris/manifold.hpp"
#include "thzris/types.hpp"

namespace thzris {

/// Diagonal unit-modulus RIS reflection Psi = diag(exp(j phi_r)), r = x sqrt(F) + y.
struct RisResponse {
  std::vector<double> phases;  // each in [0, 2 pi)

  std::size_t size() const noexcept { return phases.size(); }
  /// Diagonal entries exp(j phi_r).
  CVector coefficients() const;
  CMatrix matrix() const;

  static RisResponse identity(std::size_t f);
  /// Wraps arbitrary phases into [0, 2 pi).
  static RisResponse from_phases(std::vector<double> phases);
};

/// Equivalent BS-RIS channel seen after the TP beamformer, G_m A_m^TP.
///
/// `link_norm` is ||G_m||_F, the reference that normalizes RIS-side gains. For a
/// single ray of gain alpha it equals |alpha|, so a perfectly compensated BS beam
/// yields a column of exactly that norm.
struct EquivalentChannel {
  CMatrix columns;  // F x N_RF
  double link_norm = 0.0;

  std::size_t n_rf() const noexcept { return static_cast<std::size_t>(columns.cols()); }
};

/// Raised when the closed-form RIS solution has a vanishing denominator.
class DesignError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RisDesign {
  RisResponse response;
  /// Closed-form coefficients before projection onto the unit circle.
  CVector exact;
  /// max_r | |exact_r| - mean | / mean over all cells.
  double projection_residual = 0.0;
};

/// G_m A_m^TP. Throws std::invalid_argument on a dimension mismatch.
EquivalentChannel equivalent_channel(const CMatrix& g_m, const CMatrix& tp);

/// Closed-form RIS phases at f_c that turn the BS-RIS rays into the RIS-UE
/// departure of `target_path`.
///
/// The BS beam is assumed to be aligned to BS-RIS ray `bs_path` (perfectly
/// compensated, i.e. a_TP = a_BS). Cell r solves Psi_r g_r = a_RIS(target)_r with
///   g_r = sum_l alpha_l [a_BS^H(theta_l) a_BS(theta_bs)] a_RIS(arrival_l)_r,
/// the bracket evaluated through the Dirichlet kernel. The real common scale is
/// dropped and each coefficient projected onto the unit circle.
/// Throws DesignError if some g_r vanishes, std::out_of_range for bad indices.
RisDesign ris_exact_solution(const ChannelSet& channels, std::size_t target_path,
                             std::size_t bs_path, const SystemConfig& cfg);
/// Chains are paired with BS-RIS rays round-robin: bs_path = target_path mod L_1.
RisDesign ris_exact_solution(const ChannelSet& channels, std::size_t target_path,
                             const SystemConfig& cfg);

/// |a_RIS^H(target, f_m) Psi g_n| / link_norm, in [0, 1].
/// Throws std::invalid_argument if link_norm is zero or indices mismatch.
double ris_side_gain(const RisResponse& ris, const EquivalentChannel& eq,
                     const PhysicalDirection2D& target, double f_m, std::size_t rf_index,
                     const SystemConfig& cfg);

/// Least-squares matching objective ||a_RIS(target, f_m) - Psi g_n / link_norm||^2.
double p1_objective(const RisResponse& ris, const EquivalentChannel& eq,
                    const PhysicalDirection2D& target, double f_m, std::size_t rf_index,
                    const SystemConfig& cfg);

/// Diagnostic: |v_1^H a_RIS(dominant departure, f_c)| where v_1 is the leading right
/// singular vector of H at f_c and the dominant ray is the one with largest |gain|.
double dominant_path_alignment(const ChannelSet& channels, const SystemConfig& cfg);

}  // namespace thzris
