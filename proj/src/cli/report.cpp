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

#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace ramify::cli {

using nlohmann::json;

namespace {

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten_into(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten_into(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  if (v.is_array()) {
    const bool flat = std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
    if (!flat) {
      out.emplace_back(prefix, v.dump());
      return;
    }
    std::string joined;
    for (const auto& x : v) joined += (joined.empty() ? "" : ";") + scalar(x);
    out.emplace_back(prefix, joined);
    return;
  }
  out.emplace_back(prefix, scalar(v));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string csv_rows(const std::vector<std::vector<std::pair<std::string, std::string>>>& rows) {
  std::ostringstream os;
  if (rows.empty()) return "";
  for (std::size_t k = 0; k < rows[0].size(); ++k) os << (k ? "," : "") << csv_field(rows[0][k].first);
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << csv_field(row[k].second);
    os << "\n";
  }
  return os.str();
}

std::string sweep_table(const json& doc) {
  std::ostringstream os;
  os << "sweep over F_" << doc["field"]["q"].get<long long>() << ", u1 <= u2 in [" << doc["grid"]["umin"].get<int>()
     << ", " << doc["grid"]["umax"].get<int>() << "], seed " << doc["seed"].get<std::uint64_t>() << "\n";
  const std::vector<std::pair<std::string, int>> cols{{"group", 6},          {"classified", 11},
                                                      {"non-integral u3", 16}, {"u3 > B_G", 9},
                                                      {"violations", 11},   {"errors", 7}};
  for (const auto& [name, w] : cols) os << std::left << std::setw(w) << name << "  ";
  os << "\n";
  for (const auto& row : doc["summary"]) {
    os << std::left << std::setw(6) << row["group"].get<std::string>() << "  " << std::setw(11)
       << row["classified"].get<int>() << "  " << std::setw(16) << row["nonintegral"].get<int>() << "  "
       << std::setw(9) << row["exceeds_bound"].get<int>() << "  " << std::setw(11)
       << row["dichotomy_violations"].get<int>() << "  " << std::setw(7) << row["errors"].get<int>() << "  \n";
  }
  return os.str();
}

}  // namespace

std::vector<std::pair<std::string, std::string>> flatten(const json& doc) {
  std::vector<std::pair<std::string, std::string>> out;
  flatten_into(doc, "", out);
  return out;
}

std::string render(const json& doc, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) return doc.dump(2) + "\n";
  const bool sweep = doc.contains("command") && doc["command"] == "sweep";
  if (fmt == OutputFormat::Csv) {
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    if (sweep) {
      for (const auto& cell : doc["cells"]) rows.push_back(flatten(cell));
    } else {
      rows.push_back(flatten(doc));
    }
    return csv_rows(rows);
  }
  if (sweep) return sweep_table(doc);
  std::ostringstream os;
  const auto kv = flatten(doc);
  std::size_t w = 0;
  for (const auto& [k, v] : kv) w = std::max(w, k.size());
  for (const auto& [k, v] : kv) os << std::left << std::setw(static_cast<int>(w)) << k << "  " << v << "\n";
  return os.str();
}

}  // namespace ramify::cli
