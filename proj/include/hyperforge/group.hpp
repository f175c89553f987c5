// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperforge/subset.hpp"

namespace hyperforge {

/// Finite abelian group Z/d1 x ... x Z/dk in invariant-factor form
/// (each di >= 2 divides d(i+1)). The empty list is the trivial group.
struct AbelianGroupSpec {
  std::vector<std::size_t> factors;

  std::size_t order() const;
  /// Throws PreconditionError unless the list is in invariant-factor form.
  void check() const;
  /// "Z/2xZ/4", or "1" for the trivial group.
  std::string to_string() const;
  /// Parses "Z/2xZ/4", "2x4", "4" or "1".
  static AbelianGroupSpec parse(const std::string& text);

  friend bool operator==(const AbelianGroupSpec&, const AbelianGroupSpec&) = default;
};

/// Every abelian group of the given order, once each, ordered by factor list.
std::vector<AbelianGroupSpec> abelian_groups_of_order(std::size_t order);

/// Invariant-factor form of Z/c1 x ... x Z/ck for arbitrary ci >= 1.
AbelianGroupSpec invariant_factors(const std::vector<std::size_t>& cyclic_orders);

/// Elements encoded in mixed radix, the first factor most significant; the
/// identity is 0.
class AbelianGroup {
 public:
  explicit AbelianGroup(AbelianGroupSpec spec);

  const AbelianGroupSpec& spec() const noexcept { return spec_; }
  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }
  Element op(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  Element power(Element a, std::size_t k) const;
  std::size_t element_order(Element a) const;
  std::vector<std::size_t> components(Element a) const;

 private:
  AbelianGroupSpec spec_;
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

/// Invariant-factor form of a finite abelian group given by its table
/// (identity `e`), derived from element-order counts of p-parts.
AbelianGroupSpec identify_abelian_group(const std::vector<std::vector<Element>>& table, Element e);

}  // namespace hyperforge
