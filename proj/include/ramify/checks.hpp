// Copyright 2026 The ramify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Cross-checks between closed forms and the elimination oracle, shared by the
// selftest command, the acceptance harness and the unit tests.

#include <string>
#include <vector>

#include "ramify/instances.hpp"

namespace ramify::checks {

/// Congruence and maximum conditions on (u1, u2, r, s); empty when all hold.
std::vector<std::string> parameter_violations(const DecompData& d);

struct DfComparison {
  std::string what;
  ExtDefect closed;
  ExtDefect oracle;
  std::string certificate;
  bool agree = false;
};

struct InstanceReport {
  DecompData decomp;
  std::vector<std::string> invariant_violations;
  DfComparison beta2_y1;
  DfComparison dm_term;
  /// bound_BG vs the oracle-fed ladder, one entry per (group, choice) tried.
  int dual_route_checks = 0;
  std::vector<std::string> dual_route_mismatches;
};

/// Decomposes, compares both df values with the oracle, and, when
/// dual_route is set, compares bound_BG with the ladder for every group that
/// exists for p and both subgroup choices.
InstanceReport check_instance(const instances::PairInstance& inst, bool dual_route, const OracleOptions& opts = {});

std::string describe(const instances::PairInstance& inst);

}  // namespace ramify::checks
