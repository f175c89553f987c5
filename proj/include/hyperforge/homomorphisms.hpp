// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyperforge/constructions.hpp"
#include "hyperforge/core.hpp"

namespace hyperforge {

/// A carrier map source -> target with its verified properties. The
/// structures are referenced, not owned.
struct HomWitness {
  const HyperStructure* source = nullptr;
  const HyperStructure* target = nullptr;
  std::vector<Element> map;
  bool is_hom = false;
  bool is_epi = false;
  bool is_iso = false;
};

/// f(0) = 0, f(1) = 1, f(ab) = f(a)f(b) and f(a+b) inside f(a)+f(b).
bool is_hom(const HyperStructure& source, const HyperStructure& target,
            std::span<const Element> f);

/// Fills in the three flags.
HomWitness make_witness(const HyperStructure& source, const HyperStructure& target,
                        std::vector<Element> f);

struct HomEnumeration {
  std::vector<HomWitness> homs;  // sorted by map
  /// False when some branch ran out of budget; the list is then partial.
  bool complete = true;
  std::size_t nodes = 0;
};

/// All homomorphisms source -> target by backtracking over images of
/// multiplicative generators, closing the partial map under products and
/// checking additive inclusion as soon as both sides are assigned.
/// `budget` bounds the node count of each top-level branch, so the result
/// does not depend on `jobs`.
HomEnumeration enumerate_homs(const HyperStructure& source, const HyperStructure& target,
                              std::size_t budget = std::size_t{1} << 22, unsigned jobs = 1);

/// Surjective, and x + y is the union of f(a+b) over f(a) = x, f(b) = y.
bool is_epimorphism(const HomWitness& h);

/// Greedy generating set of the whole structure (or of the subspace spanned
/// by `within`) under x -> span u (span + x). Requires K-vector level.
std::vector<Element> k_basis(const HyperStructure& e, std::optional<Subset> within = std::nullopt);

/// Size of a minimal generating set; geometric dimension + 1.
std::size_t k_dimension(const HyperStructure& e, std::optional<Subset> within = std::nullopt);

/// Smallest subset containing `seed` and 0 closed under the hyperaddition.
Subset k_span(const HyperStructure& e, const Subset& seed);

struct LiftResult {
  enum class Kind { lifted, line_ranged };
  Kind kind = Kind::line_ranged;
  std::size_t range_dimension = 0;
  /// Ring map A1 -> A2 when lifted.
  std::vector<Element> ring_map;
  std::size_t embeddings = 0;  // field embeddings K1 -> K2 examined
  std::size_t candidates = 0;  // semi-linear maps examined
};

/// Lifts a hom between quotients A1/K1^x -> A2/K2^x to the ring map
/// A1 -> A2 inducing it, when the range spans more than a line. Throws
/// InvariantViolation when no lift or more than one lift exists in that case.
LiftResult lift_hom(const HomWitness& h, const QuotientStructure& source,
                    const QuotientStructure& target);

}  // namespace hyperforge
