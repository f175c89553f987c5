// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

// Word-array kernels behind every set-valued sum. Each kernel has a portable
// scalar reference and an AVX2 variant; the variant is picked once at startup
// from CPUID and can be pinned with HYPERFORGE_SIMD=scalar|avx2.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace hyperforge::kernels {

using Word = std::uint64_t;

struct KernelTable {
  std::string_view name;
  // dst |= src
  void (*or_into)(Word* dst, const Word* src, std::size_t words);
  // dst &= src
  void (*and_into)(Word* dst, const Word* src, std::size_t words);
  // dst |= base[idx[k] * stride ..] for every k
  void (*or_rows)(Word* dst, const Word* base, std::size_t stride,
                  const std::uint32_t* idx, std::size_t count,
                  std::size_t words);
  bool (*intersects)(const Word* a, const Word* b, std::size_t words);
  bool (*equal)(const Word* a, const Word* b, std::size_t words);
  bool (*subset_of)(const Word* a, const Word* b, std::size_t words);
  std::size_t (*popcount)(const Word* a, std::size_t words);
};

const KernelTable& scalar_kernels();

/// AVX2 kernels, or nullptr when the binary or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// The table used by the library.
const KernelTable& active();

/// Overrides the active table; used by equivalence tests and benchmarks.
void set_active(const KernelTable& table);

inline void or_into(std::span<Word> dst, std::span<const Word> src) {
  active().or_into(dst.data(), src.data(), dst.size());
}
inline void and_into(std::span<Word> dst, std::span<const Word> src) {
  active().and_into(dst.data(), src.data(), dst.size());
}
inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  return active().intersects(a.data(), b.data(), a.size());
}
inline bool equal(std::span<const Word> a, std::span<const Word> b) {
  return active().equal(a.data(), b.data(), a.size());
}
inline bool subset_of(std::span<const Word> a, std::span<const Word> b) {
  return active().subset_of(a.data(), b.data(), a.size());
}
inline std::size_t popcount(std::span<const Word> a) {
  return active().popcount(a.data(), a.size());
}

}  // namespace hyperforge::kernels
