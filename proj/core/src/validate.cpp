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

#include "thzris/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>

#include "thzris/beamforming.hpp"
#include "thzris/channel.hpp"
#include "thzris/figures.hpp"
#include "thzris/ris.hpp"

namespace thzris {

namespace {

struct Lattice {
  std::vector<std::size_t> k_t;
  std::vector<double> freqs;
  std::vector<double> dirs;
};

Lattice make_lattice(const Scenario& s) {
  Lattice lat;
  const std::size_t n_tx = s.config.n_tx();
  for (std::size_t k : {std::size_t{1}, std::size_t{4}, std::size_t{16}, std::size_t{32}, n_tx}) {
    if (n_tx % k == 0 && std::find(lat.k_t.begin(), lat.k_t.end(), k) == lat.k_t.end()) lat.k_t.push_back(k);
  }
  const auto grid = build_frequency_grid(s.config);
  const double lo = grid.frequencies_hz.front();
  const double hi = grid.frequencies_hz.back();
  for (int i = 0; i < 9; ++i) lat.freqs.push_back(lo + (hi - lo) * i / 8.0);
  lat.dirs = {-0.9, -0.5, 0.0, 0.25, 0.5, 0.9, s.bs_target().value()};
  return lat;
}

double tp_gain(const TpBeamformer& bf, PhysicalDirection1D dir, double f, const SystemConfig& cfg) {
  return array_factor(ula_steering(dir, f, cfg, cfg.n_tx()), tp_response(bf, f, cfg).col(0));
}

CheckResult finish(std::string name, double deviation, double tolerance, std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.max_deviation = deviation;
  r.tolerance = tolerance;
  r.passed = std::isfinite(deviation) && deviation <= tolerance;
  r.detail = std::move(detail);
  return r;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void ValidationReport::print(std::ostream& out) const {
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << "  max_deviation=" << sci(c.max_deviation)
        << "  tolerance=" << sci(c.tolerance);
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
  out << (passed() ? "all checks passed" : "validation FAILED") << '\n';
}

ValidationReport validate(const Scenario& s, std::optional<double> tolerance_override) {
  auto tol = [&](double nominal) { return tolerance_override.value_or(nominal); };
  const auto& cfg = s.config;
  const auto lat = make_lattice(s);
  const auto grid = build_frequency_grid(cfg);
  ValidationReport report;

  {
    double closed_dev = 0.0;
    double mode_dev = 0.0;
    double unity_dev = 0.0;
    for (std::size_t k : lat.k_t) {
      const auto c = cfg.with_k_t(k);
      for (double d : lat.dirs) {
        const PhysicalDirection1D dir(d);
        const auto literal = make_tp_beamformer(dir, c, TdMode::paper_literal);
        const auto fixed = make_tp_beamformer(dir, c, TdMode::fixed_delay);
        const auto one = make_tp_beamformer(dir, c, TdMode::one_to_one);
        for (double f : lat.freqs) {
          const double g_lit = tp_gain(literal, dir, f, c);
          closed_dev = std::max(closed_dev, std::abs(g_lit - tp_gain_closed_form(dir, f, c)));
          mode_dev = std::max(mode_dev, std::abs(g_lit - tp_gain(fixed, dir, f, c)));
          unity_dev = std::max(unity_dev, std::abs(1.0 - tp_gain(one, dir, f, c)));
        }
      }
    }
    report.checks.push_back(finish("closed_form_equivalence", closed_dev, tol(1e-9)));
    report.checks.push_back(finish("delay_mode_equivalence", mode_dev, tol(1e-12)));
    report.checks.push_back(finish("one_to_one_unity", unity_dev, tol(1e-12)));
  }

  {
    const auto target = s.bs_target();
    const auto bf = make_beamformer(target, cfg, Architecture::conventional);
    double dev = 0.0;
    for (double f : lat.freqs) {
      for (double d : lat.dirs) {
        const PhysicalDirection1D look(d);
        dev = std::max(dev, std::abs(tp_gain(bf, look, f, cfg) -
                                     conventional_gain_closed_form(target, look, f, cfg)));
      }
    }
    report.checks.push_back(finish("conventional_closed_form", dev, tol(1e-9)));

    const auto dirs = direction_grid(s.sweep.grid_points);
    const double step = dirs.size() > 1 ? dirs[1] - dirs[0] : 2.0;
    double split_dev = 0.0;
    for (double f : {grid.frequencies_hz.front(), grid.frequencies_hz.back()}) {
      const auto gains = array_factor_sweep(dirs, f, tp_response(bf, f, cfg).col(0), cfg);
      const auto peak = static_cast<std::size_t>(std::max_element(gains.begin(), gains.end()) - gains.begin());
      split_dev = std::max(split_dev, std::abs(dirs[peak] - beam_split_direction(target, f, cfg.f_center_hz())));
    }
    report.checks.push_back(finish("beam_split_law", split_dev, tol(step), "grid step " + sci(step)));
  }

  const auto ris_target = s.channels.ris_ue_paths.front().departure;
  const bool los = s.channels.bs_ris_paths.size() == 1;
  RisDesign design;
  try {
    design = ris_exact_solution(s.channels, 0, cfg);
  } catch (const DesignError& e) {
    report.checks.push_back(finish("ris_design", std::numeric_limits<double>::infinity(), 0.0, e.what()));
    return report;
  }

  {
    double dev = 0.0;
    for (std::size_t l = 0; l < s.channels.ris_ue_paths.size(); ++l) {
      const auto d = ris_exact_solution(s.channels, l, cfg);
      dev = std::max(dev, (d.response.coefficients().cwiseAbs().array() - 1.0).abs().maxCoeff());
    }
    report.checks.push_back(finish("ris_unit_modulus", dev, tol(1e-12)));
  }

  const auto bf = make_beamformer(s.bs_target(), cfg, s.architecture);
  const double f_c = cfg.f_center_hz();
  {
    const auto eq = equivalent_channel(bs_ris_channel(s.channels, f_c, cfg), tp_response(bf, f_c, cfg));
    const double objective = p1_objective(design.response, eq, ris_target, f_c, 0, cfg);
    std::mt19937_64 engine(s.noise.seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    double best_random = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<double> phases(cfg.f_ris());
      for (auto& p : phases) p = phase(engine);
      best_random = std::min(best_random, p1_objective(RisResponse::from_phases(phases), eq, ris_target, f_c, 0, cfg));
    }
    const std::string detail = "objective " + sci(objective) + ", best of 1000 random " + sci(best_random) +
                               ", projection residual " + sci(design.projection_residual);
    if (los) {
      auto r = finish("p1_optimality", objective, tol(1e-9), detail);
      r.passed = r.passed && objective <= best_random;
      report.checks.push_back(r);
    } else {
      report.checks.push_back(finish("p1_optimality", std::max(0.0, objective - best_random), tol(0.0), detail));
    }

    if (los) {
      const double gain = ris_side_gain(design.response, eq, ris_target, f_c, 0, cfg);
      report.checks.push_back(finish("ris_alignment", std::abs(1.0 - gain), tol(1e-9),
                                     "svd alignment " + sci(dominant_path_alignment(s.channels, cfg))));
    }
  }

  {
    const auto fig4 = run_fig4(s);
    const std::size_t m = grid.size();
    double sym = 0.0;
    double range = 0.0;
    for (std::size_t c = 0; c < s.fig4_kt.size(); ++c) {
      for (std::size_t i = 0; i < m; ++i) {
        const double a = fig4.rows[c * m + i].gain;
        const double b = fig4.rows[c * m + (m - 1 - i)].gain;
        sym = std::max(sym, std::abs(a - b));
        range = std::max({range, a - 1.0, -a});
      }
    }
    if (los) report.checks.push_back(finish("ris_frequency_symmetry", sym, tol(1e-9)));
    for (const auto& row : run_sweep(s).rows) range = std::max({range, row.gain - 1.0, -row.gain});
    report.checks.push_back(finish("gain_range", range, tol(1e-12)));
  }

  {
    const auto targets = s.chain_targets();
    const auto chains = make_tp_beamformer(targets, cfg, td_mode_of(s.architecture));
    const CMatrix digital = default_digital_precoder(cfg);
    std::vector<CMatrix> tps;
    std::vector<CMatrix> ds(grid.size(), digital);
    for (double f : grid.frequencies_hz) tps.push_back(tp_response(chains, f, cfg));
    const double total = total_transmit_power(tps, ds);
    report.checks.push_back(finish("power_budget", std::abs(total - cfg.p_total()) / cfg.p_total(), tol(1e-12)));

    NoiseSource quiet(NoiseModel{0.0, s.noise.seed});
    CVector sym = CVector::Ones(static_cast<Eigen::Index>(cfg.n_streams()));
    const double f = grid.frequencies_hz.back();
    const CVector y1 = received_signal(cfg, s.channels, design.response, chains, digital, sym, f, quiet);
    const CVector y2 = received_signal(cfg, s.channels, design.response, chains, digital, 2.0 * sym, f, quiet);
    const double scale = std::max(y1.norm(), std::numeric_limits<double>::min());
    report.checks.push_back(finish("received_signal_linearity", (y2 - 2.0 * y1).norm() / scale, tol(1e-10)));
  }
  return report;
}

}  // namespace thzris
