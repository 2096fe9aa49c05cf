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

#include "thzris/ris.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

namespace thzris {

namespace {

double wrap_phase(double phi) {
  double w = std::fmod(phi, 2.0 * kPi);
  if (w < 0.0) w += 2.0 * kPi;
  if (w >= 2.0 * kPi) w = 0.0;
  return w;
}

// a_BS^H(theta_l) a_BS(theta_ref) at f_c through the Dirichlet kernel.
cplx bs_correlation(double theta_l, double theta_ref, std::size_t n_tx) {
  const double x = theta_l - theta_ref;
  const double n = static_cast<double>(n_tx);
  return dirichlet_sinc(n_tx, x) / n * unit_phasor(0.5 * (n - 1.0) * kPi * x);
}

}  // namespace

CVector RisResponse::coefficients() const {
  CVector c(static_cast<Eigen::Index>(phases.size()));
  for (std::size_t r = 0; r < phases.size(); ++r) c[static_cast<Eigen::Index>(r)] = unit_phasor(phases[r]);
  return c;
}

CMatrix RisResponse::matrix() const { return coefficients().asDiagonal(); }

RisResponse RisResponse::identity(std::size_t f) { return RisResponse{std::vector<double>(f, 0.0)}; }

RisResponse RisResponse::from_phases(std::vector<double> phases) {
  for (auto& p : phases) p = wrap_phase(p);
  return RisResponse{std::move(phases)};
}

EquivalentChannel equivalent_channel(const CMatrix& g_m, const CMatrix& tp) {
  if (g_m.cols() != tp.rows()) {
    throw std::invalid_argument("BS-RIS channel columns must equal TP rows");
  }
  return EquivalentChannel{g_m * tp, g_m.norm()};
}

RisDesign ris_exact_solution(const ChannelSet& channels, std::size_t target_path,
                             std::size_t bs_path, const SystemConfig& cfg) {
  if (target_path >= channels.ris_ue_paths.size()) throw std::out_of_range("target path index");
  if (bs_path >= channels.bs_ris_paths.size()) throw std::out_of_range("BS-RIS path index");

  const double f_c = cfg.f_center_hz();
  const double theta_ref = channels.bs_ris_paths[bs_path].departure.value();
  const CVector target = upa_steering(channels.ris_ue_paths[target_path].departure, f_c, cfg,
                                      cfg.f_ris()).column();

  CVector denom = CVector::Zero(target.size());
  double gain_sum = 0.0;
  for (const auto& p : channels.bs_ris_paths) {
    const cplx weight = p.gain * bs_correlation(p.departure.value(), theta_ref, cfg.n_tx());
    denom += weight * upa_steering(p.arrival, f_c, cfg, cfg.f_ris()).column();
    gain_sum += std::abs(p.gain);
  }

  const double floor = 1e-12 * gain_sum / std::sqrt(static_cast<double>(cfg.f_ris()));
  CVector exact(target.size());
  for (Eigen::Index r = 0; r < target.size(); ++r) {
    if (!(std::abs(denom[r]) > floor)) {
      throw DesignError("closed-form RIS design degenerates at cell " + std::to_string(r));
    }
    exact[r] = target[r] / denom[r];
  }

  const RVector mag = exact.cwiseAbs();
  const double mean = mag.mean();
  RisDesign design;
  design.projection_residual = (mag.array() - mean).abs().maxCoeff() / mean;
  design.exact = exact / mean;
  design.response.phases.resize(static_cast<std::size_t>(exact.size()));
  for (Eigen::Index r = 0; r < exact.size(); ++r) {
    design.response.phases[static_cast<std::size_t>(r)] = wrap_phase(std::arg(exact[r]));
  }
  return design;
}

RisDesign ris_exact_solution(const ChannelSet& channels, std::size_t target_path,
                             const SystemConfig& cfg) {
  if (channels.bs_ris_paths.empty()) throw std::out_of_range("no BS-RIS paths");
  return ris_exact_solution(channels, target_path, target_path % channels.bs_ris_paths.size(), cfg);
}

namespace {

CVector reflected_column(const RisResponse& ris, const EquivalentChannel& eq, std::size_t rf_index) {
  if (rf_index >= eq.n_rf()) throw std::invalid_argument("RF chain index out of range");
  if (ris.size() != static_cast<std::size_t>(eq.columns.rows())) {
    throw std::invalid_argument("RIS response size mismatch");
  }
  if (!(eq.link_norm > 0.0)) throw std::invalid_argument("equivalent channel has zero norm");
  return ris.coefficients().cwiseProduct(eq.columns.col(static_cast<Eigen::Index>(rf_index))) /
         eq.link_norm;
}

}  // namespace

double ris_side_gain(const RisResponse& ris, const EquivalentChannel& eq,
                     const PhysicalDirection2D& target, double f_m, std::size_t rf_index,
                     const SystemConfig& cfg) {
  const CVector col = reflected_column(ris, eq, rf_index);
  const auto steer = upa_steering(target, f_m, cfg, static_cast<std::size_t>(col.size()));
  return std::abs(steer.project(col));
}

double p1_objective(const RisResponse& ris, const EquivalentChannel& eq,
                    const PhysicalDirection2D& target, double f_m, std::size_t rf_index,
                    const SystemConfig& cfg) {
  const CVector col = reflected_column(ris, eq, rf_index);
  const auto steer = upa_steering(target, f_m, cfg, static_cast<std::size_t>(col.size()));
  return (steer.column() - col).squaredNorm();
}

double dominant_path_alignment(const ChannelSet& channels, const SystemConfig& cfg) {
  if (channels.ris_ue_paths.empty()) throw std::invalid_argument("no RIS-UE paths");
  const CMatrix h = ris_ue_channel(channels, cfg.f_center_hz(), cfg);
  Eigen::JacobiSVD<CMatrix> svd(h, Eigen::ComputeThinV);
  const CVector v1 = svd.matrixV().col(0);
  const auto dominant = std::max_element(
      channels.ris_ue_paths.begin(), channels.ris_ue_paths.end(),
      [](const RisUePath& a, const RisUePath& b) { return std::abs(a.gain) < std::abs(b.gain); });
  const CVector a = upa_steering(dominant->departure, cfg.f_center_hz(), cfg, cfg.f_ris()).column();
  return std::abs(v1.dot(a));
}

}  // namespace thzris
