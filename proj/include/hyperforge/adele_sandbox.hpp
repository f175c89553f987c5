// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

// Semi-local class spaces: a product of finite fields F_{q^m_v} modulo the
// diagonal units of F_q, with its ideals, primes and prime elements.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperforge/config.hpp"
#include "hyperforge/constructions.hpp"
#include "hyperforge/ideals.hpp"

namespace hyperforge {

struct PlaceSystem {
  std::size_t q = 0;
  std::vector<std::size_t> degrees;  // residue field of place v is F_{q^degrees[v]}

  std::vector<std::size_t> residue_sizes() const;
  /// From residue sizes, each a power of q.
  static PlaceSystem from_residues(std::size_t q, const std::vector<std::size_t>& sizes);
};

struct SemiLocalClassSpace {
  PlaceSystem places;
  QuotientStructure quotient;  // carrier of H = R/G

  const HyperStructure& h() const { return quotient.structure; }
  const FiniteRing& ring() const { return *quotient.ring; }
  /// Bit v set when the class vanishes at place v.
  std::size_t zero_places(Element cls) const;
};

/// Requires q > 2, every degree >= 1 and |R| within bounds.sandbox_ring_size.
SemiLocalClassSpace build_semilocal(const PlaceSystem& ps, const Bounds& bounds = default_bounds());

struct PlaceIdeal {
  std::size_t places = 0;  // bitmask of Z
  HyperIdeal ideal;        // {x : x_w = 0 for w in Z}
};

/// One ideal per subset of places, indexed by the bitmask; checked to be
/// exactly the ideals found by enumerate_ideals.
std::vector<PlaceIdeal> classify_ideals(const SemiLocalClassSpace& s, unsigned jobs = 1);

struct SpecEntry {
  std::size_t place = 0;
  HyperIdeal prime;
};

/// The primes p_w, cross-checked against enumerate_prime_ideals.
std::vector<SpecEntry> prime_spectrum(const SemiLocalClassSpace& s, unsigned jobs = 1);

struct Fiber {
  std::size_t place = 0;
  std::vector<Element> generators;  // {a : aH = p_w}, sorted
  Element idempotent = 0;
  std::size_t isotropy_order = 0;   // stabilizer of a generator in H^x
};

struct PrimeGroupoid {
  std::vector<Element> units;  // H^x
  std::vector<Fiber> fibers;   // one per place, in place order
};

/// Fibers of principal primes, found from the H^x orbits on H. Throws
/// InvariantViolation if a principal prime is no p_w, if H^x is not
/// transitive on a fiber, or if a fiber has no unique idempotent.
PrimeGroupoid prime_elements(const SemiLocalClassSpace& s, unsigned jobs = 1);

/// Product of a and b when both lie in the same fiber.
std::optional<Element> partial_product(const SemiLocalClassSpace& s, const PrimeGroupoid& p, Element a,
                                       Element b);

struct GroupoidReport {
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
  std::string to_text() const;
};

/// Closure, associativity, identity, inverses in each fiber; cross-fiber
/// products not prime; u -> u p_w onto the fiber with kernel of order
/// q^m_w - 1; fiber sizes |H^x| / (q^m_w - 1). With a single place the
/// fiber is {0} and the kernel is all of H^x.
GroupoidReport check_groupoid_laws(const SemiLocalClassSpace& s, const PrimeGroupoid& p, unsigned jobs = 1);

/// Drops one place and checks that the projection maps each remaining fiber
/// onto the fiber of the smaller model, multiplicatively, idempotent to
/// idempotent.
GroupoidReport check_place_removal(const SemiLocalClassSpace& s, const PrimeGroupoid& p, std::size_t place,
                                   const Bounds& bounds = default_bounds());

/// One block per place: residue size, fiber size, isotropy order and the
/// idempotent's components.
std::string sandbox_report(const SemiLocalClassSpace& s, const PrimeGroupoid& p);

}  // namespace hyperforge
