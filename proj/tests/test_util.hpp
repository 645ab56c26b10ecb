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

#include "ramify/instances.hpp"

namespace ramify::testing {

inline LaurentSeries S(const FieldPtr& F, const std::string& text, int prec = 2) {
  return parse_series(F, text, prec);
}

inline bool ext_equal(const ExtElement& a, const ExtElement& b) {
  const ExtElement d = a - b;
  for (const auto& c : d.coeffs)
    if (!c.is_zero()) return false;
  return true;
}

/// Every (p, f) the randomized suites run over.
struct FieldCase {
  int p, f;
};
inline constexpr FieldCase kFieldCases[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {5, 2}};

}  // namespace ramify::testing
