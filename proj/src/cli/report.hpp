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

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "job.hpp"

namespace ramify::cli {

/// Dotted-path flattening of a document; arrays of scalars are joined with
/// ';', other arrays are kept as compact JSON.
std::vector<std::pair<std::string, std::string>> flatten(const nlohmann::json& doc);

/// Sweep documents render their cells as CSV rows and their per-group
/// summary as the table; every other document renders as one flattened row.
std::string render(const nlohmann::json& doc, OutputFormat fmt);

}  // namespace ramify::cli
