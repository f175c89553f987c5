// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <chrono>

#include "doctest.h"
#include "hyperforge/classification.hpp"
#include "hyperforge/errors.hpp"
#include "hyperforge/homomorphisms.hpp"
#include "tables.hpp"

using namespace hyperforge;

namespace {

Bounds wide() {
  Bounds b = default_bounds();
  b.k_extension_size = 15;
  return b;
}

bool contains_iso(const ExtensionSearch& s, const HyperStructure& r) {
  for (const auto& e : s.entries)
    if (is_isomorphic(e.structure, r)) return true;
  return false;
}

}  // namespace

TEST_CASE("no extensions of K with three or four elements") {
  for (std::size_t n : {3, 4}) {
    const auto s = enumerate_K_extensions(n);
    CHECK(s.entries.empty());
    CHECK(exhaustive_homogeneous_extensions(Builtin::K, n).empty());
  }
  CHECK_THROWS_AS(enumerate_K_extensions(2), PreconditionError);
  CHECK_THROWS_AS(enumerate_K_extensions(9), BoundError);
}

TEST_CASE("extensions of K with five elements agree with the raw table search") {
  const auto s = enumerate_K_extensions(5);
  const auto raw = exhaustive_homogeneous_extensions(Builtin::K, 5);
  CHECK(s.entries.size() == raw.size());
  for (const auto& r : raw) CHECK(contains_iso(s, r));
  CHECK(contains_iso(s, certify(testdata::ex5(), Level::hyperfield)));
  CHECK(contains_iso(s, field_quotient(3, 2).structure));
}

TEST_CASE("extension entries") {
  for (std::size_t n = 5; n <= 8; ++n) {
    const auto s = enumerate_K_extensions(n);
    // Every group of order n - 1 gives a single line; no plane fits n - 1 points.
    CHECK(s.entries.size() == abelian_groups_of_order(n - 1).size());
    for (const auto& e : s.entries) {
      CHECK(validate(e.structure, Level::hyperfield).passed());
      CHECK(e.structure.sum(1, 1) == Subset(n, {0, 1}));
      CHECK(e.label == ExtensionLabel::lyndon);
      CHECK(e.dimension == 1);
      CHECK(is_isomorphism(e.structure, lyndon_extension(e.group, LyndonVariant::plain), e.witness));
    }
  }
  CHECK(contains_iso(enumerate_K_extensions(6), field_quotient(4, 2).structure));
}

TEST_CASE("extensions of K up to fifteen elements") {
  const auto b = wide();
  const auto s14 = enumerate_K_extensions(14, b);
  REQUIRE(s14.entries.size() == 2);
  std::size_t planes = 0;
  for (const auto& e : s14.entries) {
    if (e.label == ExtensionLabel::field_quotient) {
      ++planes;
      CHECK(e.field == std::pair<std::size_t, std::size_t>{3, 3});
      CHECK(e.dimension == 2);
    } else {
      CHECK(e.label == ExtensionLabel::lyndon);
    }
  }
  CHECK(planes == 1);
  for (std::size_t n : {9, 10, 11, 12, 13, 15}) {
    const auto s = enumerate_K_extensions(n, b);
    CHECK(s.entries.size() == abelian_groups_of_order(n - 1).size());
    for (const auto& e : s.entries) CHECK(e.label == ExtensionLabel::lyndon);
  }
}

TEST_CASE("every admissible relation is examined") {
  // Partitions of m points into blocks of at least three: a(m) = sum over
  // k >= 2 of C(m-1, k) a(m-1-k).
  std::vector<std::size_t> a{1, 0, 0};
  for (std::size_t m = 3; m <= 13; ++m) {
    std::size_t total = 0, c = 1;  // c = C(m-1, k)
    for (std::size_t k = 0; k < m; ++k) {
      if (k >= 2) total += c * a[m - 1 - k];
      c = c * (m - 1 - k) / (k + 1);
    }
    a.push_back(total);
  }
  const auto b = wide();
  for (std::size_t n = 3; n <= 15; ++n)
    CHECK(enumerate_K_extensions(n, b).candidates == abelian_groups_of_order(n - 1).size() * a[n - 2]);
}

TEST_CASE("search output does not depend on the worker count") {
  const auto b = wide();
  for (std::size_t n : {7, 13}) {
    CHECK(classification_table(n, enumerate_K_extensions(n, b, 1)) ==
          classification_table(n, enumerate_K_extensions(n, b, 3)));
  }
}

TEST_CASE("no finite proper extensions of S") {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 4; n <= 9; ++n) {
    const auto s = enumerate_S_extensions(n);
    CHECK(s.entries.empty());
    CHECK(s.survivors == 0);
    if ((n - 1) % 2 == 0) CHECK(s.candidates > 0);
  }
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::minutes(5));
  CHECK(exhaustive_homogeneous_extensions(Builtin::S, 5).empty());
  // The raw search does find S itself.
  const auto s3 = exhaustive_homogeneous_extensions(Builtin::S, 3);
  REQUIRE(s3.size() == 1);
  CHECK(is_isomorphic(s3[0], builtin(Builtin::S)));
  CHECK_THROWS_AS(enumerate_S_extensions(3), PreconditionError);
  CHECK_THROWS_AS(enumerate_S_extensions(10), BoundError);
}

TEST_CASE("dimension two hyperrings") {
  const auto plain = classify_dimension2(lyndon_extension(AbelianGroupSpec{{4}}, LyndonVariant::plain));
  CHECK(plain.variant == LyndonVariant::plain);
  CHECK(plain.group == AbelianGroupSpec{{4}});

  const auto nil = classify_dimension2(lyndon_extension(AbelianGroupSpec{{4}}, LyndonVariant::nilpotent));
  CHECK(nil.variant == LyndonVariant::nilpotent);
  CHECK(nil.group == AbelianGroupSpec{{4}});

  const auto idem = classify_dimension2(lyndon_extension(AbelianGroupSpec{{2, 2}}, LyndonVariant::idempotent_pair));
  CHECK(idem.variant == LyndonVariant::idempotent_pair);
  CHECK(idem.group == AbelianGroupSpec{{2, 2}});

  CHECK(classify_dimension2(certify(testdata::ex5(), Level::hyperfield)).variant == LyndonVariant::plain);
  CHECK_THROWS_AS(classify_dimension2(field_quotient(3, 3).structure), PreconditionError);
  CHECK_THROWS_AS(classify_dimension2(builtin(Builtin::S)), PreconditionError);
}
