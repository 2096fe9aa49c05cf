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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "../oracle.hpp"
#include "thzris/beamforming.hpp"
#include "thzris/channel.hpp"
#include "thzris/figures.hpp"
#include "thzris/ris.hpp"
#include "thzris/scenario.hpp"

using namespace thzris;
namespace fs = std::filesystem;

namespace {

constexpr double kFc = 300e9;

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> lattice_frequencies()
{
    std::vector<double> f(9);
    for (int m = 0; m < 9; ++m) f[m] = 286.5e9 + 27e9 * m / 8.0;
    return f;
}

constexpr double kLatticeDirs[] = {-0.9, -0.5, 0.0, 0.25, 0.5, 0.9};
constexpr std::size_t kLatticeKt[] = {1, 4, 16, 32, 256};

double brute_gain(const TpBeamformer& bf, double dir, double f, const SystemConfig& cfg)
{
    return array_factor(ula_steering(PhysicalDirection1D(dir), f, cfg, cfg.n_tx()), tp_response(bf, f, cfg).col(0));
}

Outcome closed_form_equivalence()
{
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (std::size_t k_t : kLatticeKt) {
        const SystemConfig cfg = SystemConfig().with_k_t(k_t);
        for (double f : lattice_frequencies()) {
            for (double dir : kLatticeDirs) {
                const auto bf = make_tp_beamformer(PhysicalDirection1D(dir), cfg, TdMode::paper_literal);
                const double brute = brute_gain(bf, dir, f, cfg);
                const double closed = tp_gain_closed_form(PhysicalDirection1D(dir), f, cfg);
                worst = std::max(worst, std::abs(brute - closed));
            }
        }
    }
    const double elapsed = seconds_since(t0);
    return {worst <= 1e-9 && elapsed < 5.0,
            "max |brute - closed| = " + fmt(worst) + " (tol 1e-9), runtime " + fmt(elapsed) + " s (limit 5 s)"};
}

Outcome beam_split_law()
{
    const SystemConfig cfg;
    const double f = 313.5e9;
    const auto dirs = direction_grid(4096);
    const double step = dirs[1] - dirs[0];
    const auto bf = make_beamformer(PhysicalDirection1D(0.5), cfg, Architecture::conventional);
    const auto gains = array_factor_sweep(dirs, f, tp_response(bf, f, cfg).col(0), cfg);
    const auto peak = static_cast<std::size_t>(std::distance(gains.begin(), std::max_element(gains.begin(), gains.end())));
    const double peak_dir = dirs[peak];
    const double at_target = brute_gain(bf, 0.5, f, cfg);
    const bool ok = std::abs(peak_dir - 0.47847) <= step && std::abs(at_target - 0.0407) <= 1e-3;
    return {ok, "peak at " + fmt(peak_dir) + " (expected 0.47847 +- " + fmt(step) + "), gain at 0.5 = " +
                    fmt(at_target) + " (expected 0.0407 +- 1e-3)"};
}

Outcome td_mitigation()
{
    // reference scenario on the 10-subcarrier grid whose edges are 286.5 and 313.5 GHz.
    const Scenario base = reference_scenario();
    const SystemConfig cfg10 = base.config.with_subcarriers(10);
    const PhysicalDirection1D target(0.5);

    auto min_gain = [&](const SystemConfig& cfg, Architecture arch) {
        const auto bf = make_beamformer(target, cfg, arch);
        double lowest = 2.0;
        for (double f : build_frequency_grid(cfg).frequencies_hz) lowest = std::min(lowest, brute_gain(bf, 0.5, f, cfg));
        return lowest;
    };
    const double g16 = min_gain(cfg10.with_k_t(16), Architecture::tp_paper_literal);
    const double g32 = min_gain(cfg10.with_k_t(32), Architecture::tp_paper_literal);

    double worst_one = 0.0;
    for (const SystemConfig& cfg : {cfg10, base.config}) {
        for (Architecture arch : {Architecture::one_to_one, Architecture::tp_paper_literal}) {
            const SystemConfig c = arch == Architecture::one_to_one ? cfg : cfg.with_k_t(256);
            const auto bf = make_beamformer(target, c, arch);
            for (double f : build_frequency_grid(c).frequencies_hz)
                worst_one = std::max(worst_one, std::abs(brute_gain(bf, 0.5, f, c) - 1.0));
        }
    }

    const bool ok16 = std::abs(g16 - 0.9477) <= 1e-4;
    const bool ok32 = std::abs(g32 - 0.9871) <= 1e-4;
    const bool ok256 = worst_one <= 1e-12;
    return {ok16 && ok32 && ok256,
            "K_T=16 min " + fmt(g16) + (ok16 ? " ok" : " OUT") + " (0.9477 +- 1e-4); K_T=32 min " + fmt(g32) +
                (ok32 ? " ok" : " OUT") + " (0.9871 +- 1e-4); K_T=256 max |g-1| " + fmt(worst_one) +
                (ok256 ? " ok" : " OUT") + " (1e-12)"};
}

Outcome mode_equivalence()
{
    double worst = 0.0;
    for (std::size_t k_t : kLatticeKt) {
        const SystemConfig cfg = SystemConfig().with_k_t(k_t);
        for (double dir : kLatticeDirs) {
            const auto a = make_tp_beamformer(PhysicalDirection1D(dir), cfg, TdMode::paper_literal);
            const auto b = make_tp_beamformer(PhysicalDirection1D(dir), cfg, TdMode::fixed_delay);
            for (double f : lattice_frequencies())
                worst = std::max(worst, std::abs(brute_gain(a, dir, f, cfg) - brute_gain(b, dir, f, cfg)));
        }
    }
    return {worst <= 1e-12, "max gain difference " + fmt(worst) + " (tol 1e-12)"};
}

double ris_gain(const Scenario& s, const SystemConfig& cfg, const RisResponse& ris, double f)
{
    const auto bf = make_beamformer(s.bs_target(), cfg, s.architecture);
    const auto eq = equivalent_channel(bs_ris_channel(s.channels, f, cfg), tp_response(bf, f, cfg));
    return ris_side_gain(ris, eq, s.channels.ris_ue_paths[0].departure, f, 0, cfg);
}

Outcome ris_alignment()
{
    const Scenario s = reference_scenario();
    double worst_fc = 0.0;
    for (std::size_t k_t : s.fig4_kt) {
        const SystemConfig cfg = s.config.with_k_t(k_t);
        const auto design = ris_exact_solution(s.channels, 0, cfg);
        worst_fc = std::max(worst_fc, std::abs(ris_gain(s, cfg, design.response, kFc) - 1.0));
    }

    const auto table = run_fig4(s);
    const std::size_t m = s.config.m_subcarriers();
    double worst_sym = 0.0;
    double worst_order = 0.0;
    for (std::size_t curve = 0; curve < 2; ++curve) {
        for (std::size_t i = 0; i < m; ++i) {
            const double lo = table.rows[curve * m + i].gain;
            const double hi = table.rows[curve * m + (m - 1 - i)].gain;
            worst_sym = std::max(worst_sym, std::abs(lo - hi));
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        worst_order = std::max(worst_order, table.rows[i].gain - table.rows[m + i].gain);

    const bool ok = worst_fc <= 1e-9 && worst_sym <= 1e-9 && worst_order <= 0.0;
    return {ok, "max |gain(f_c) - 1| " + fmt(worst_fc) + ", max asymmetry " + fmt(worst_sym) +
                    ", max (K_T=16 - K_T=32) " + fmt(worst_order) + " over " + std::to_string(m) + " subcarriers"};
}

Outcome p1_optimality()
{
    const Scenario s = reference_scenario();
    const auto& cfg = s.config;
    const auto design = ris_exact_solution(s.channels, 0, cfg);
    const auto bf = make_beamformer(s.bs_target(), cfg, s.architecture);
    const auto eq = equivalent_channel(bs_ris_channel(s.channels, kFc, cfg), tp_response(bf, kFc, cfg));
    const auto target = s.channels.ris_ue_paths[0].departure;
    const double best = p1_objective(design.response, eq, target, kFc, 0, cfg);

    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    double best_random = 1e300;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> psi(cfg.f_ris());
        for (auto& p : psi) p = phase(rng);
        best_random = std::min(best_random, p1_objective(RisResponse::from_phases(psi), eq, target, kFc, 0, cfg));
    }
    return {best <= 1e-9 && best < best_random,
            "objective " + fmt(best) + " (tol 1e-9), best of 1000 random " + fmt(best_random)};
}

Outcome end_to_end()
{
    SystemParams p;
    p.n_tx = 16;
    p.k_t = 4;
    p.n_rx = 4;
    p.f_ris = 16;
    p.m_subcarriers = 8;
    const SystemConfig cfg(p);

    ChannelSet c;
    c.bs_ris_paths.push_back({cplx(0.8, 0.3), PhysicalDirection1D(0.5), PhysicalDirection2D(0.4, 0.5)});
    c.bs_ris_paths.push_back({cplx(-0.2, 0.4), PhysicalDirection1D(-0.25), PhysicalDirection2D(-0.7, 0.1)});
    c.ris_ue_paths.push_back({cplx(0.0, 1.0), PhysicalDirection2D(0.2, 0.7), PhysicalDirection1D(-0.3)});
    c.ris_ue_paths.push_back({cplx(0.5, -0.5), PhysicalDirection2D(-0.6, -0.3), PhysicalDirection1D(0.8)});

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    std::vector<double> psi(16);
    for (auto& v : psi) v = phase(rng);
    const RisResponse ris = RisResponse::from_phases(psi);

    const double dir = 0.5;
    const auto bf = make_beamformer(PhysicalDirection1D(dir), cfg, Architecture::tp_paper_literal);
    const CMatrix d = default_digital_precoder(cfg);
    CVector s(1);
    s << cplx(0.6, -0.8);

    double worst = 0.0;
    std::vector<CMatrix> tps;
    std::vector<CMatrix> digitals;
    for (double f : build_frequency_grid(cfg).frequencies_hz) {
        NoiseSource quiet(NoiseModel{});
        const CVector y = received_signal(cfg, c, ris, bf, d, s, f, quiet);

        // Independent chain from element sums.
        oracle::Mat g = oracle::zeros(16, 16);
        for (const auto& path : c.bs_ris_paths) {
            const auto& a = path.arrival;
            oracle::add_outer(g, path.gain,
                              oracle::conj(oracle::upa_row(a.azimuth_sin(), a.elevation_sin(), a.elevation_cos(), f, kFc, 16)),
                              oracle::ula_row(path.departure.value(), f, kFc, 16));
        }
        oracle::Mat h = oracle::zeros(4, 16);
        for (const auto& path : c.ris_ue_paths) {
            const auto& dep = path.departure;
            oracle::add_outer(h, path.gain, oracle::conj(oracle::ula_row(path.arrival.value(), f, kFc, 4)),
                              oracle::upa_row(dep.azimuth_sin(), dep.elevation_sin(), dep.elevation_cos(), f, kFc, 16));
        }
        oracle::Vec x = oracle::tp_column(dir, f, kFc, 16, 4);
        const oracle::cx scale = d(0, 0) * s[0];
        for (auto& v : x) v *= scale;
        oracle::Vec r = oracle::matvec(g, x);
        for (std::size_t i = 0; i < 16; ++i) r[i] *= oracle::expj(psi[i]);
        const oracle::Vec ref = oracle::matvec(h, r);
        for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(y[static_cast<Eigen::Index>(i)] - ref[i]));

        tps.push_back(tp_response(bf, f, cfg));
        digitals.push_back(d);
    }
    const double power = total_transmit_power(tps, digitals);
    const double power_dev = std::abs(power - cfg.p_total());
    return {worst <= 1e-10 && power_dev <= 1e-12 * cfg.p_total(),
            "max |y - naive| " + fmt(worst) + " (tol 1e-10), total power " + fmt(power) + " vs budget " +
                fmt(cfg.p_total())};
}

int run_cli(const std::string& args)
{
    const std::string cmd = std::string("\"") + THZRIS_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism(const fs::path& work)
{
    std::string detail;
    bool ok = true;
    for (const std::string fig : {"fig3a", "fig3b", "fig4"}) {
        const fs::path a = work / ("det_" + fig + "_a");
        const fs::path b = work / ("det_" + fig + "_b");
        const int ra = run_cli(fig + " --seed 42 --out \"" + a.string() + "\"");
        const int rb = run_cli(fig + " --seed 42 --out \"" + b.string() + "\"");
        const std::string ca = slurp(a / (fig + ".csv"));
        const std::string cb = slurp(b / (fig + ".csv"));
        const bool same = ra == 0 && rb == 0 && !ca.empty() && ca == cb;
        ok = ok && same;
        detail += fig + (same ? " identical (" + std::to_string(ca.size()) + " bytes) " : " DIFFERENT ");
    }
    return {ok, detail};
}

Outcome performance(const fs::path& work)
{
    const auto t0 = std::chrono::steady_clock::now();
    const int rc = run_cli("fig3a --select all --grid-points 4096 --out \"" + (work / "perf").string() + "\"");
    const double elapsed = seconds_since(t0);
    std::size_t lines = 0;
    {
        std::ifstream in(work / "perf" / "fig3a.csv");
        std::string line;
        while (std::getline(in, line)) ++lines;
    }
    const std::size_t expected = 128 * 4096 + 1;
    return {rc == 0 && lines == expected && elapsed < 10.0,
            std::to_string(lines - (lines > 0 ? 1 : 0)) + " rows in " + fmt(elapsed) + " s (limit 10 s)"};
}

}  // namespace

int main()
{
    const fs::path work = fs::temp_directory_path() / ("thzris_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(work);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 closed-form equivalence", closed_form_equivalence},
        {"2 beam-split law", beam_split_law},
        {"3 time-delay mitigation", td_mitigation},
        {"4 delay-mode equivalence", mode_equivalence},
        {"5 RIS alignment", ris_alignment},
        {"6 P1 optimality", p1_optimality},
        {"7 end-to-end chain", end_to_end},
        {"8 determinism", [&] { return determinism(work); }},
        {"9 performance", [&] { return performance(work); }},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome out;
        try {
            out = check();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        if (!out.passed) ++failures;
        std::cout << (out.passed ? "PASS" : "FAIL") << "  criterion " << name << ": " << out.detail << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed\n";

    std::error_code ec;
    fs::remove_all(work, ec);
    return failures == 0 ? 0 : 1;
}
