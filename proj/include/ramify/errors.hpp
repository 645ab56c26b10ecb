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

#include <stdexcept>
#include <string>

namespace ramify {

/// Base class of every error raised by the math layer.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  /// Stable machine-readable tag, used in CLI error documents.
  virtual const char* kind() const noexcept { return "Error"; }
};

#define RAMIFY_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(what) {}         \
    const char* kind() const noexcept override { return #Name; }    \
  };

// The answer depends on series terms beyond the known precision.
RAMIFY_DEFINE_ERROR(InsufficientPrecision)
RAMIFY_DEFINE_ERROR(InvalidField)
RAMIFY_DEFINE_ERROR(ParseError)
RAMIFY_DEFINE_ERROR(NonCoprimeValuation)
RAMIFY_DEFINE_ERROR(DependentGenerators)
RAMIFY_DEFINE_ERROR(WindowTooSmall)
RAMIFY_DEFINE_ERROR(WrongCharacteristic)
RAMIFY_DEFINE_ERROR(PreconditionViolated)
RAMIFY_DEFINE_ERROR(NonIntegralLower)
RAMIFY_DEFINE_ERROR(DegenerateTower)

#undef RAMIFY_DEFINE_ERROR

}  // namespace ramify
