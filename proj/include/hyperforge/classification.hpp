// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

// Isomorph-free enumeration of small hyperfield extensions of K and S.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperforge/config.hpp"
#include "hyperforge/constructions.hpp"
#include "hyperforge/core.hpp"
#include "hyperforge/geometry.hpp"
#include "hyperforge/group.hpp"

namespace hyperforge {

enum class ExtensionLabel { lyndon, field_quotient, non_desarguesian_plane, unknown };
std::string_view to_string(ExtensionLabel label);

struct ClassificationEntry {
  HyperStructure structure;  // carrier: 0 is zero, 1 + g for group element g
  AbelianGroupSpec group;
  Partition relation;        // canonical relation
  std::size_t dimension = 0; // projective dimension of the geometry
  ExtensionLabel label = ExtensionLabel::unknown;
  std::optional<std::pair<std::size_t, std::size_t>> field;  // (q, m) for quotients
  std::vector<Element> witness;  // isomorphism onto the labeled model
  std::string note;
};

struct ExtensionSearch {
  std::vector<ClassificationEntry> entries;
  std::size_t candidates = 0;  // complete relations, or up-set assignments, examined
  std::size_t survivors = 0;   // candidates that gave a hyperfield, before deduplication
};

/// Hyperfield extensions of K with n elements up to isomorphism, from the
/// relation data on each abelian group of order n - 1. Requires
/// 3 <= n <= bounds.k_extension_size.
ExtensionSearch enumerate_K_extensions(std::size_t n, const Bounds& bounds = default_bounds(),
                                       unsigned jobs = 1);

/// Hyperfield extensions of S with n elements, from the order data on each
/// abelian group of order n - 1 and involution epsilon. Requires
/// 4 <= n <= bounds.s_extension_size.
ExtensionSearch enumerate_S_extensions(std::size_t n, const Bounds& bounds = default_bounds(),
                                       unsigned jobs = 1);

/// Every hyperfield on {0} u H with x + y = x(1 + y/x), trying all sets 1 + h
/// directly. `base` is K or S and fixes 1 + 1 (and 1 + epsilon). Throws
/// BoundError when the candidate count exceeds `limit`.
std::vector<HyperStructure> exhaustive_homogeneous_extensions(Builtin base, std::size_t n,
                                                              std::size_t limit = std::size_t{1} << 22);

struct Dimension2Class {
  LyndonVariant variant;
  AbelianGroupSpec group;
  std::vector<Element> witness;  // isomorphism onto lyndon_extension(group, variant)
};

/// Matches a commutative hyperring extension of K of K-dimension 2 against
/// K[H], K[H]^(1) and K[H]^(2). Throws PreconditionError on other inputs and
/// InvariantViolation when no presentation matches.
Dimension2Class classify_dimension2(const HyperStructure& r, unsigned jobs = 1);

/// Text table of a search, one line per entry.
std::string classification_table(std::size_t n, const ExtensionSearch& search);

}  // namespace hyperforge
