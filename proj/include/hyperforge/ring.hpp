// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

// Classical finite commutative rings, the input to quotient constructions.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperforge/config.hpp"
#include "hyperforge/errors.hpp"
#include "hyperforge/subset.hpp"

namespace hyperforge {

/// A finite commutative ring stored as a product of table-backed factors.
/// Elements are encoded in mixed radix over the factors, the first factor
/// most significant, so a product of small fields never needs a full
/// |R| x |R| table.
class FiniteRing {
 public:
  struct Factor {
    std::size_t n = 0;
    Element zero = 0;
    Element one = 1;
    std::vector<std::uint16_t> add;  // n x n
    std::vector<std::uint16_t> mul;  // n x n
    std::vector<std::uint16_t> neg;
    std::string name;
  };

  /// Ring from user tables; every commutative ring axiom is checked.
  static FiniteRing from_tables(const std::vector<std::vector<Element>>& add,
                                const std::vector<std::vector<Element>>& mul, Element zero,
                                Element one, std::string name = "R");
  /// Ring from tables produced by a trusted builder; only shapes are checked.
  static FiniteRing trusted(Factor factor);
  /// Componentwise product.
  static FiniteRing product(const std::vector<FiniteRing>& rings);

  std::size_t size() const noexcept { return size_; }
  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  Element add(Element a, Element b) const;
  Element mul(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element pow(Element a, std::size_t k) const;

  bool is_unit(Element a) const;
  std::vector<Element> units() const;
  /// Single factor with every nonzero element invertible.
  bool is_field() const;

  std::vector<Element> components(Element a) const;
  Element encode(const std::vector<Element>& components) const;

  /// Full add and mul tables as rows (small rings only).
  std::vector<std::vector<Element>> add_rows() const;
  std::vector<std::vector<Element>> mul_rows() const;

 private:
  FiniteRing() = default;
  void finish();

  std::vector<Factor> factors_;
  std::vector<std::size_t> radix_;  // weight of each factor's digit
  std::size_t size_ = 0;
  Element zero_ = 0;
  Element one_ = 0;
  std::string name_;
};

/// Z/n.
FiniteRing zmod(std::size_t n, const Bounds& bounds = default_bounds());

/// Decomposes q = p^k; returns {0, 0} when q is not a prime power.
std::pair<std::size_t, std::size_t> prime_power(std::size_t q);

/// Field of order q: Z/p for k = 1, else residues modulo the lexicographically
/// smallest monic irreducible of degree k over Z/p (leading coefficient
/// excluded, higher coefficients compared first). Element c0 + c1 T + ... is
/// encoded as c0 + c1 p + c2 p^2 + ...
FiniteRing finite_field(std::size_t q, const Bounds& bounds = default_bounds());

/// The monic irreducible chosen by finite_field, coefficients constant first.
std::vector<std::size_t> field_modulus(std::size_t q);

FiniteRing product_of_fields(const std::vector<std::size_t>& qs,
                             const Bounds& bounds = default_bounds());

/// base[T]/(f) for monic f given constant term first (leading 1 included).
/// Element sum c_i T^i is encoded as sum c_i |base|^i.
FiniteRing poly_quotient(const FiniteRing& base, const std::vector<Element>& monic,
                         std::string name, const Bounds& bounds = default_bounds());

/// Subgroup G of the unit group of a ring, members sorted.
class UnitSubgroup {
 public:
  /// Checks that the members are units, contain 1, and are closed under
  /// products (finite, so inverses follow).
  UnitSubgroup(const FiniteRing& ring, std::vector<Element> members);
  /// Subgroup generated by the given units.
  static UnitSubgroup generated(const FiniteRing& ring, const std::vector<Element>& generators);

  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Element e) const;

  friend bool operator==(const UnitSubgroup&, const UnitSubgroup&) = default;

 private:
  UnitSubgroup() = default;
  std::vector<Element> members_;
};

/// Every subgroup of R^x, ordered by (order, members).
std::vector<UnitSubgroup> unit_subgroups(const FiniteRing& ring);

/// Images of F_q^x under a ring embedding F_q -> R, where R is a field or a
/// product of fields each containing F_q. The embedding into each factor is
/// the one sending the generator T of F_q to the smallest root of its modulus.
UnitSubgroup embedded_base_units(const FiniteRing& ring, std::size_t q);

/// Rings of order at most `max_size` used for exhaustive property checks:
/// Z/n, small fields, products, and truncated polynomial rings.
std::vector<FiniteRing> small_ring_corpus(std::size_t max_size);

}  // namespace hyperforge
