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

#include "ramify/kernels.hpp"

#if (defined(__x86_64__) || defined(_M_X64)) && !defined(RAMIFY_NO_AVX2)
#include <immintrin.h>
#define RAMIFY_HAVE_AVX2_KERNELS 1
#endif

namespace ramify::kernels {

#if RAMIFY_HAVE_AVX2_KERNELS

namespace {

#define RAMIFY_AVX2 __attribute__((target("avx2")))

// Values x < 256 reduce exactly with floor(x/p) = mulhi(x, ceil(2^16/p)) for p <= 13.
RAMIFY_AVX2 inline __m256i mod_p_epi16(__m256i x, __m256i magic, __m256i pv) {
  const __m256i q = _mm256_mulhi_epu16(x, magic);
  return _mm256_sub_epi16(x, _mm256_mullo_epi16(q, pv));
}

RAMIFY_AVX2 void axpy_avx2(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, unsigned k, unsigned p) {
  k %= p;
  if (k == 0) return;
  const __m256i kv = _mm256_set1_epi16(static_cast<short>(k));
  const __m256i pv = _mm256_set1_epi16(static_cast<short>(p));
  const __m256i magic = _mm256_set1_epi16(static_cast<short>((65536u + p - 1) / p));
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d_lo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(d));
    const __m256i d_hi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(d, 1));
    const __m256i s_lo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(s));
    const __m256i s_hi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(s, 1));
    const __m256i r_lo = mod_p_epi16(_mm256_add_epi16(d_lo, _mm256_mullo_epi16(s_lo, kv)), magic, pv);
    const __m256i r_hi = mod_p_epi16(_mm256_add_epi16(d_hi, _mm256_mullo_epi16(s_hi, kv)), magic, pv);
    const __m256i packed = _mm256_permute4x64_epi64(_mm256_packus_epi16(r_lo, r_hi), 0xD8);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), packed);
  }
  for (; i < n; ++i) dst[i] = static_cast<std::uint8_t>((dst[i] + k * src[i]) % p);
}

RAMIFY_AVX2 void conv_avx2(std::uint32_t* out, const std::uint8_t* a, std::size_t na, const std::uint8_t* b,
                           std::size_t nb) {
  for (std::size_t i = 0; i < na; ++i) {
    const std::uint32_t ai = a[i];
    if (ai == 0) continue;
    const __m256i av = _mm256_set1_epi32(static_cast<int>(ai));
    std::uint32_t* o = out + i;
    std::size_t j = 0;
    for (; j + 8 <= nb; j += 8) {
      const __m128i bb = _mm_loadl_epi64(reinterpret_cast<const __m128i*>(b + j));
      const __m256i bv = _mm256_cvtepu8_epi32(bb);
      __m256i ov = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(o + j));
      ov = _mm256_add_epi32(ov, _mm256_mullo_epi32(av, bv));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(o + j), ov);
    }
    for (; j < nb; ++j) o[j] += ai * b[j];
  }
}

RAMIFY_AVX2 std::size_t find_nonzero_avx2(const std::uint8_t* v, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    const unsigned mask = ~static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(x, zero)));
    if (mask) return i + static_cast<std::size_t>(__builtin_ctz(mask));
  }
  for (; i < n; ++i)
    if (v[i]) return i;
  return n;
}

#undef RAMIFY_AVX2

constexpr KernelTable kAvx2{"avx2", &axpy_avx2, &conv_avx2, &find_nonzero_avx2};

}  // namespace

const KernelTable* avx2_kernels() noexcept {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

#else

const KernelTable* avx2_kernels() noexcept { return nullptr; }

#endif

}  // namespace ramify::kernels
