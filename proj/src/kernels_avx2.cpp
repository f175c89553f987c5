// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

// Built with -mavx2; only reached after a CPUID check.

#include "hyperforge/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

#include <bit>

namespace hyperforge::kernels {
namespace {

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void or_into_avx2(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i) dst[i] |= src[i];
}

void and_into_avx2(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i) dst[i] &= src[i];
}

void or_rows_avx2(Word* dst, const Word* base, std::size_t stride,
                  const std::uint32_t* idx, std::size_t count,
                  std::size_t words) {
  std::size_t i = 0;
  // Register-blocked: one 256-bit accumulator per 4 words of the row.
  for (; i + 4 <= words; i += 4) {
    __m256i acc = load(dst + i);
    for (std::size_t k = 0; k < count; ++k)
      acc = _mm256_or_si256(acc, load(base + static_cast<std::size_t>(idx[k]) * stride + i));
    store(dst + i, acc);
  }
  for (; i < words; ++i) {
    Word acc = dst[i];
    for (std::size_t k = 0; k < count; ++k)
      acc |= base[static_cast<std::size_t>(idx[k]) * stride + i];
    dst[i] = acc;
  }
}

bool intersects_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i x = _mm256_and_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(x, x)) return true;
  }
  for (; i < words; ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

bool equal_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i x = _mm256_xor_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(x, x)) return false;
  }
  for (; i < words; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool subset_of_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    // testc(b, a) is 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  }
  for (; i < words; ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

// Nibble lookup popcount (Mula), horizontal sum via SAD against zero.
std::size_t popcount_avx2(const Word* a, std::size_t words) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = load(a + i);
    const __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(v, low));
    const __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(v, 4), low));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256()));
  }
  alignas(32) Word lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::size_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

const KernelTable kAvx2{
    "avx2",          or_into_avx2, and_into_avx2,  or_rows_avx2,
    intersects_avx2, equal_avx2,   subset_of_avx2, popcount_avx2,
};

}  // namespace

const KernelTable* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace hyperforge::kernels

#else

namespace hyperforge::kernels {
const KernelTable* avx2_kernels() { return nullptr; }
}  // namespace hyperforge::kernels

#endif
