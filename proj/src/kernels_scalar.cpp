// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <cstdlib>
#include <string_view>

#include "hyperforge/kernels.hpp"

namespace hyperforge::kernels {
namespace {

void or_into_scalar(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

void and_into_scalar(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

void or_rows_scalar(Word* dst, const Word* base, std::size_t stride,
                    const std::uint32_t* idx, std::size_t count,
                    std::size_t words) {
  for (std::size_t k = 0; k < count; ++k) {
    const Word* row = base + static_cast<std::size_t>(idx[k]) * stride;
    for (std::size_t i = 0; i < words; ++i) dst[i] |= row[i];
  }
}

bool intersects_scalar(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

bool equal_scalar(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool subset_of_scalar(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

std::size_t popcount_scalar(const Word* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i)
    total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

const KernelTable kScalar{
    "scalar",         or_into_scalar, and_into_scalar,  or_rows_scalar,
    intersects_scalar, equal_scalar,  subset_of_scalar, popcount_scalar,
};

const KernelTable* pick_default() {
  const KernelTable* avx2 = avx2_kernels();
  if (const char* forced = std::getenv("HYPERFORGE_SIMD")) {
    const std::string_view want(forced);
    if (want == "scalar") return &kScalar;
    if (want == "avx2" && avx2 != nullptr) return avx2;
  }
  return avx2 != nullptr ? avx2 : &kScalar;
}

const KernelTable*& active_slot() {
  static const KernelTable* slot = pick_default();
  return slot;
}

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable& active() { return *active_slot(); }

void set_active(const KernelTable& table) { active_slot() = &table; }

}  // namespace hyperforge::kernels
