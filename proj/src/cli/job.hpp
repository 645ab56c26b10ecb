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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ramify/field.hpp"

namespace ramify::cli {

enum class Command { Classify, Reduce, Decompose, Sweep, Selftest };
enum class OutputFormat { Json, Csv, Table };

inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitUsage = 2;

struct JobSpec {
  Command command = Command::Classify;
  FieldSpec field;

  // classify, decompose
  std::string beta1, beta2;
  std::string kappa3 = "0";
  std::string group;
  std::string choice = "Sigma1pSigma2";
  // reduce
  std::string kappa;

  OutputFormat output = OutputFormat::Json;
  /// Precision given to series without an explicit O(t^N).
  int precision = 2;
  /// Doublings allowed after InsufficientPrecision.
  int max_precision_retries = 6;
  /// Oracle window override, 0 for automatic.
  int window = 0;
  /// Ladder df values from the closed forms instead of the oracle.
  bool closed_form_ladder = false;

  // sweep, selftest
  std::uint64_t seed = 1;
  int trials = 200;
  int umin = 1;
  int umax = 15;
  /// Empty means every group that exists for p.
  std::vector<std::string> groups;
  int per_cell = 1;
  bool random_kappa3 = true;
  /// 0 picks the hardware concurrency.
  int threads = 0;
};

/// Default precision: RAMIFY_PRECISION if set and valid, else 2.
int default_precision();

/// Runs one job, writing the result document to out and diagnostics to err.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace ramify::cli
