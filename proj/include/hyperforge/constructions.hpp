// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

// Builders for concrete hyperstructures: the Krasner and sign hyperfields,
// quotients of rings by unit subgroups, and single-line extensions of K.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperforge/config.hpp"
#include "hyperforge/core.hpp"
#include "hyperforge/group.hpp"
#include "hyperforge/ring.hpp"

namespace hyperforge {

enum class Builtin { K, S };

/// K = {0, 1} or S = {0, 1, -1} (indices 0, 1, 2), at hyperfield level.
HyperStructure builtin(Builtin which);

/// Index of -1 in builtin(S).
inline constexpr Element kSignMinusOne = 2;

/// R/G together with the data it came from.
struct QuotientStructure {
  HyperStructure structure;
  std::shared_ptr<const FiniteRing> ring;
  UnitSubgroup subgroup;
  std::vector<Element> representative;  // class -> smallest ring element
  std::vector<Element> class_of;        // ring element -> class
};

/// Carrier = G-orbits of R, ordered: orbit of 0, orbit of 1, then the rest
/// by smallest representative. x + y = {(x g + y h) G}. Structures up to
/// bounds.exhaustive_validation are validated axiom by axiom; larger ones
/// are labeled by construction.
QuotientStructure quotient_by_subgroup(const FiniteRing& ring, const UnitSubgroup& g,
                                       const Bounds& bounds = default_bounds());

/// {0} u G is a subfield of R; equivalently R/G contains K. Requires |G| > 1.
bool subfield_criterion(const FiniteRing& ring, const UnitSubgroup& g);

/// {0} u G u -G is a subfield ordered with positive part G, i.e. additively
/// closed with G + G inside G. Requires -1 not in G and G != {1}.
bool ordered_subfield_criterion(const FiniteRing& ring, const UnitSubgroup& g);

/// True when the sign hyperfield sits inside the quotient via 1 and -1.
bool quotient_contains_sign(const QuotientStructure& q);

enum class LyndonVariant { plain, nilpotent, idempotent_pair };

std::string_view to_string(LyndonVariant v);

/// The single-line table on {0} u H (plus a or {e, f} for the variants),
/// without validation: x + y = R \ {0, x, y} for distinct nonzero x, y.
/// Index 0 is zero, 1 + code(h) is h, extra elements come last.
HyperStructure lyndon_table(const AbelianGroupSpec& h, LyndonVariant variant);

/// K[H] (hyperfield) or the dimension-2 hyperrings with a^2 = 0, au = a, or
/// e^2 = e, f^2 = f, ef = 0. Refuses groups below the size where the table is
/// a hypergroup.
HyperStructure lyndon_extension(const AbelianGroupSpec& h, LyndonVariant variant);

/// Size of the smallest admissible group for a variant.
std::size_t lyndon_min_order(LyndonVariant variant);

/// F_{q^m} / F_q^x. For q = 2 the subgroup is trivial and the result is the
/// field itself.
QuotientStructure field_quotient(std::size_t q, std::size_t m,
                                 const Bounds& bounds = default_bounds());

/// Sign in S: 1, -1 (index 2) or 0.
Element sign_of_integer(std::int64_t n);

/// |s| in K for s in S.
Element abs_to_K(Element s);

}  // namespace hyperforge
