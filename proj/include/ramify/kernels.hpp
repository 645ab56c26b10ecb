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

// Data-parallel F_p kernels used by the elimination oracle and by dense
// prime-field series products. Every entry has a scalar reference
// implementation; SIMD variants are selected at runtime and must agree with
// the reference bit for bit.
//
// Element vectors hold residues in [0, p) as bytes, p <= 13.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace ramify::kernels {

struct KernelTable {
  const char* name;
  /// dst[i] = (dst[i] + k * src[i]) mod p.
  void (*axpy_mod_p)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, unsigned k, unsigned p);
  /// out[i + j] += a[i] * b[j]; out has na + nb - 1 slots. No reduction.
  void (*conv_accumulate)(std::uint32_t* out, const std::uint8_t* a, std::size_t na, const std::uint8_t* b,
                          std::size_t nb);
  /// Index of the first nonzero byte, or n.
  std::size_t (*find_nonzero)(const std::uint8_t* v, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;
/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

/// Kernel set in use. Chosen once: RAMIFY_KERNELS=scalar|avx2 overrides the
/// CPU probe.
const KernelTable& active() noexcept;

/// Selects a kernel set by name for the rest of the process; returns false if
/// unavailable.
bool select(std::string_view name) noexcept;

}  // namespace ramify::kernels
