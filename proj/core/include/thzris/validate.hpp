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

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "thzris/scenario.hpp"

namespace thzris {

struct CheckResult {
  std::string name;
  bool passed = false;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  void print(std::ostream& out) const;
};

/// Runs the invariant suite on a scenario: closed form against brute force, delay
/// mode equivalence, one-to-one compensation, beam split law, RIS unit modulus,
/// matching optimality, RIS alignment, power budget, gain range and linearity.
/// `tolerance_override` replaces every per-check tolerance.
ValidationReport validate(const Scenario& scenario,
                          std::optional<double> tolerance_override = std::nullopt);

}  // namespace thzris
