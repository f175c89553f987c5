// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

// Scalar and AVX2 kernels must agree bit for bit on every input shape,
// including word counts that are not a multiple of the vector width.

#include <random>
#include <vector>

#include "doctest.h"
#include "hyperforge/kernels.hpp"

using namespace hyperforge::kernels;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, int density) {
  std::vector<Word> out(n);
  for (auto& w : out) {
    w = rng();
    // Sparse inputs exercise the early-exit paths.
    for (int d = 0; d < density; ++d) w &= rng();
  }
  return out;
}

}  // namespace

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const KernelTable* simd = avx2_kernels();
  if (simd == nullptr) {
    MESSAGE("AVX2 unavailable on this machine; only the scalar table is exercised");
    return;
  }
  const KernelTable& ref = scalar_kernels();
  std::mt19937_64 rng(20261016);
  for (std::size_t words : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 22, 33, 64, 100}) {
    for (int density = 0; density < 4; ++density) {
      for (int rep = 0; rep < 8; ++rep) {
        auto a = random_words(rng, words, density);
        auto b = random_words(rng, words, density);
        if (rep == 0) b = a;
        if (rep == 1)
          for (std::size_t i = 0; i < words; ++i) b[i] = a[i] | rng();

        auto x = a, y = a;
        ref.or_into(x.data(), b.data(), words);
        simd->or_into(y.data(), b.data(), words);
        CHECK(x == y);
        x = a, y = a;
        ref.and_into(x.data(), b.data(), words);
        simd->and_into(y.data(), b.data(), words);
        CHECK(x == y);
        CHECK(ref.intersects(a.data(), b.data(), words) == simd->intersects(a.data(), b.data(), words));
        CHECK(ref.equal(a.data(), b.data(), words) == simd->equal(a.data(), b.data(), words));
        CHECK(ref.subset_of(a.data(), b.data(), words) == simd->subset_of(a.data(), b.data(), words));
        CHECK(ref.subset_of(b.data(), a.data(), words) == simd->subset_of(b.data(), a.data(), words));
        CHECK(ref.popcount(a.data(), words) == simd->popcount(a.data(), words));

        const std::size_t rows = 9;
        auto base = random_words(rng, rows * (words + 1), density);
        std::vector<std::uint32_t> idx;
        for (std::size_t k = 0; k < rng() % 7; ++k) idx.push_back(static_cast<std::uint32_t>(rng() % rows));
        x = a, y = a;
        ref.or_rows(x.data(), base.data(), words + 1, idx.data(), idx.size(), words);
        simd->or_rows(y.data(), base.data(), words + 1, idx.data(), idx.size(), words);
        CHECK(x == y);
      }
    }
  }
}

TEST_CASE("active table can be pinned") {
  const KernelTable& before = active();
  set_active(scalar_kernels());
  CHECK(active().name == scalar_kernels().name);
  set_active(before);
  CHECK(active().name == before.name);
}
