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

#include <atomic>
#include <cstdlib>
#include <string>

#include "ramify/kernels.hpp"

namespace ramify::kernels {

namespace {

void axpy_scalar(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, unsigned k, unsigned p) {
  if (k % p == 0) return;
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint8_t>((dst[i] + k * src[i]) % p);
}

void conv_scalar(std::uint32_t* out, const std::uint8_t* a, std::size_t na, const std::uint8_t* b,
                 std::size_t nb) {
  for (std::size_t i = 0; i < na; ++i) {
    const std::uint32_t ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) out[i + j] += ai * b[j];
  }
}

std::size_t find_nonzero_scalar(const std::uint8_t* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (v[i]) return i;
  return n;
}

constexpr KernelTable kScalar{"scalar", &axpy_scalar, &conv_scalar, &find_nonzero_scalar};

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* probe() noexcept {
  if (const char* env = std::getenv("RAMIFY_KERNELS")) {
    const std::string want(env);
    if (want == "scalar") return &kScalar;
    if (want == "avx2" && avx2_kernels()) return avx2_kernels();
  }
  if (const KernelTable* k = avx2_kernels()) return k;
  return &kScalar;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

const KernelTable& active() noexcept {
  const KernelTable* k = g_active.load(std::memory_order_acquire);
  if (!k) {
    k = probe();
    g_active.store(k, std::memory_order_release);
  }
  return *k;
}

bool select(std::string_view name) noexcept {
  if (name == "scalar") {
    g_active.store(&kScalar, std::memory_order_release);
    return true;
  }
  if (name == "avx2" && avx2_kernels()) {
    g_active.store(avx2_kernels(), std::memory_order_release);
    return true;
  }
  return false;
}

}  // namespace ramify::kernels
