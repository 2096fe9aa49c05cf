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

#include <sstream>

#include "thzris/validate.hpp"

using namespace thzris;

TEST_CASE("Validate - reference scenario passes every check")
{
    const auto report = validate(reference_scenario());
    CHECK(report.checks.size() >= 10);
    for (const auto& c : report.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }
    CHECK(report.passed());
    std::ostringstream out;
    report.print(out);
    CHECK(out.str().find("PASS") != std::string::npos);
}

TEST_CASE("Validate - zero tolerance fails")
{
    const auto report = validate(reference_scenario(), 0.0);
    CHECK_FALSE(report.passed());
    std::ostringstream out;
    report.print(out);
    CHECK(out.str().find("FAIL") != std::string::npos);
}

TEST_CASE("Validate - multi-path scenario")
{
    const auto report = validate(load_scenario(THZRIS_SCENARIO_DIR "/two_path.yaml"));
    for (const auto& c : report.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
    }
}
