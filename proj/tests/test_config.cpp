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

#include <catch2/catch_amalgamated.hpp>

#include "thzris/config.hpp"

using namespace thzris;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Config - reference defaults and derived constants")
{
    const SystemConfig cfg;
    CHECK(cfg.n_tx() == 256);
    CHECK(cfg.k_t() == 16);
    CHECK(cfg.p_sub() == 16);
    CHECK(cfg.ris_side() == 8);
    CHECK_THAT(cfg.lambda_c(), WithinRel(299792458.0 / 300e9, 1e-15));
    CHECK_THAT(cfg.d_spacing(), WithinRel(0.5 * cfg.lambda_c(), 1e-15));
}

TEST_CASE("Config - invariant violations name the broken rule")
{
    SystemParams p;
    p.k_t = 24;
    CHECK_THROWS_WITH(SystemConfig(p), Catch::Matchers::ContainsSubstring("k_t must divide n_tx"));

    p = SystemParams{};
    p.f_ris = 50;
    CHECK_THROWS_WITH(SystemConfig(p), Catch::Matchers::ContainsSubstring("perfect square"));

    p = SystemParams{};
    p.bandwidth_hz = 600e9;
    CHECK_THROWS_AS(SystemConfig(p), ConfigError);

    p = SystemParams{};
    p.n_streams = 2;
    CHECK_THROWS_AS(SystemConfig(p), ConfigError);

    p = SystemParams{};
    p.n_tx = 4;
    p.k_t = 4;
    p.n_rf = 8;
    CHECK_THROWS_AS(SystemConfig(p), ConfigError);

    p = SystemParams{};
    p.m_subcarriers = 0;
    CHECK_THROWS_AS(SystemConfig(p), ConfigError);
}

TEST_CASE("Frequency grid - formula values")
{
    const auto g10 = build_frequency_grid(300e9, 30e9, 10);
    REQUIRE(g10.size() == 10);
    CHECK(g10[0] == 286.5e9);
    CHECK(g10[9] == 313.5e9);

    const auto g1 = build_frequency_grid(123.4e9, 10e9, 1);
    CHECK(g1[0] == 123.4e9);

    const auto g3 = build_frequency_grid(300e9, 30e9, 3);
    CHECK(g3[1] == 300e9);
}

TEST_CASE("Frequency grid - rejects empty and non-positive grids")
{
    CHECK_THROWS_AS(build_frequency_grid(300e9, 30e9, 0), ConfigError);
    CHECK_THROWS_AS(build_frequency_grid(10e9, 40e9, 4), ConfigError);
}

TEST_CASE("Frequency grid - symmetry and uniform spacing")
{
    const double fc = 300e9;
    const double bw = 30e9;
    auto m = GENERATE(1u, 2u, 3u, 10u, 64u, 127u, 128u, 1000u);
    const auto g = build_frequency_grid(fc, bw, m);
    REQUIRE(g.size() == m);
    CHECK_THAT(0.5 * (g[0] + g[m - 1]), WithinRel(fc, 1e-15));
    for (std::size_t i = 0; i < m; ++i) {
        CHECK_THAT(g[i] + g[m - 1 - i], WithinRel(2.0 * fc, 1e-15));
        if (i > 0) {
            CHECK(g[i] > g[i - 1]);
            CHECK_THAT(g[i] - g[i - 1], WithinRel(bw / m, 1e-9));
        }
    }
}

TEST_CASE("Config - with_k_t revalidates")
{
    const SystemConfig cfg;
    CHECK(cfg.with_k_t(32).p_sub() == 8);
    CHECK_THROWS_AS(cfg.with_k_t(3), ConfigError);
    CHECK(cfg.with_subcarriers(10).m_subcarriers() == 10);
}
