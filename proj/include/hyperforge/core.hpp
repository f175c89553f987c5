// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

// Finite hyperstructures: a carrier with a single-valued multiplication and a
// set-valued addition, plus the axiom checks that certify them.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperforge/errors.hpp"
#include "hyperforge/subset.hpp"

namespace hyperforge {

/// Carrier {0..size-1} with the distinguished elements zero and one.
class Carrier {
 public:
  Carrier(std::size_t size, Element zero = 0, Element one = 1);

  std::size_t size() const noexcept { return size_; }
  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }
  bool contains(Element e) const noexcept { return e < size_; }

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  std::size_t size_;
  Element zero_;
  Element one_;
};

/// n x n table of subsets, stored row-major as fixed-width bitmasks so the
/// whole block add[u][0..n) is one contiguous word array.
class AddTable {
 public:
  AddTable() = default;
  explicit AddTable(std::size_t n);
  /// entries[a][b] lists the members of a+b.
  static AddTable from_lists(const std::vector<std::vector<std::vector<Element>>>& entries);

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_entry() const noexcept { return stride_; }

  std::span<const Word> entry(Element a, Element b) const noexcept {
    return {data_.data() + (static_cast<std::size_t>(a) * n_ + b) * stride_, stride_};
  }
  std::span<Word> entry(Element a, Element b) noexcept {
    return {data_.data() + (static_cast<std::size_t>(a) * n_ + b) * stride_, stride_};
  }
  /// add[a][0..n) as one span of n * words_per_entry() words.
  std::span<const Word> block(Element a) const noexcept {
    return {data_.data() + static_cast<std::size_t>(a) * n_ * stride_, n_ * stride_};
  }
  const Word* data() const noexcept { return data_.data(); }

  Subset get(Element a, Element b) const { return Subset(n_, entry(a, b)); }
  void set(Element a, Element b, const Subset& s);
  void insert(Element a, Element b, Element member);

  friend bool operator==(const AddTable& x, const AddTable& y) {
    return x.n_ == y.n_ && x.data_ == y.data_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// n x n table of carrier indices.
class MulTable {
 public:
  MulTable() = default;
  explicit MulTable(std::size_t n) : n_(n), data_(n * n, 0) {}
  static MulTable from_rows(const std::vector<std::vector<Element>>& rows);

  std::size_t size() const noexcept { return n_; }
  Element operator()(Element a, Element b) const noexcept {
    return data_[static_cast<std::size_t>(a) * n_ + b];
  }
  Element& operator()(Element a, Element b) noexcept {
    return data_[static_cast<std::size_t>(a) * n_ + b];
  }
  std::span<const Element> row(Element a) const noexcept {
    return {data_.data() + static_cast<std::size_t>(a) * n_, n_};
  }

  friend bool operator==(const MulTable&, const MulTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> data_;
};

/// Validation levels. kvector sits beside the hyperring chain: it adds
/// x+x = {0,x} to the hypergroup axioms, which S (and every ring of odd
/// characteristic) does not satisfy.
enum class Level { raw, hypergroup, kvector, hyperring, hyperfield };

std::string_view to_string(Level level);
std::optional<Level> level_from_string(std::string_view name);

class HyperStructure {
 public:
  /// A raw structure; validation is separate. `mul` may be absent for a pure
  /// hypergroup.
  HyperStructure(Carrier carrier, AddTable add, std::optional<MulTable> mul,
                 bool commutative = true);

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  Element zero() const noexcept { return carrier_.zero(); }
  Element one() const noexcept { return carrier_.one(); }
  bool commutative() const noexcept { return commutative_; }

  const AddTable& add_table() const noexcept { return add_; }
  std::span<const Word> sum_words(Element a, Element b) const noexcept { return add_.entry(a, b); }
  Subset sum(Element a, Element b) const { return add_.get(a, b); }
  bool sum_contains(Element a, Element b, Element c) const noexcept {
    return ((add_.entry(a, b)[c / kWordBits] >> (c % kWordBits)) & 1U) != 0;
  }

  bool has_multiplication() const noexcept { return mul_.has_value(); }
  const MulTable& mul_table() const;
  Element mul(Element a, Element b) const noexcept { return (*mul_)(a, b); }

  /// Highest level on the raw < hypergroup < hyperring < hyperfield chain that
  /// passed validation.
  Level level() const noexcept { return level_; }
  bool is_kvector() const noexcept { return kvector_; }
  bool satisfies(Level level) const noexcept;
  /// Level asserted by a construction theorem instead of an axiom-by-axiom
  /// check (large quotients of rings).
  bool certified_by_construction() const noexcept { return by_construction_; }

  /// The unique y with 0 in x+y. Requires hypergroup level.
  Element neg(Element x) const;

  Subset empty_set() const { return Subset(size()); }
  Subset singleton(Element e) const { return Subset(size(), {e}); }

  friend bool same_tables(const HyperStructure& a, const HyperStructure& b) {
    return a.carrier_ == b.carrier_ && a.add_ == b.add_ && a.mul_ == b.mul_;
  }

 private:
  friend HyperStructure certify(HyperStructure structure, Level level);
  friend HyperStructure assume_level(HyperStructure structure, Level level, bool kvector);

  void compute_negation();

  Carrier carrier_;
  AddTable add_;
  std::optional<MulTable> mul_;
  bool commutative_ = true;
  Level level_ = Level::raw;
  bool kvector_ = false;
  bool by_construction_ = false;
  std::vector<Element> negation_;
};

enum class Axiom {
  shape,               // tables consistent with the carrier, entries nonempty
  commutativity,
  associativity,
  neutral_zero,
  unique_inverse,
  reversibility,
  idempotent_sum,      // x + x = {0, x}
  mul_closed,          // multiplication table present and in range
  mul_associative,
  mul_identity,
  mul_commutative,     // asserted commutativity flag
  left_distributive,
  right_distributive,
  zero_absorbing,
  zero_ne_one,
  nonzero_group,       // hyperfield clause
};

std::string_view to_string(Axiom axiom);

struct AxiomResult {
  Axiom axiom;
  bool passed = true;
  /// First counterexample as a tuple of carrier indices.
  std::vector<Element> counterexample;
};

struct ValidationReport {
  Level requested = Level::raw;
  std::vector<AxiomResult> results;  // in check order

  bool passed() const;
  const AxiomResult* find(Axiom axiom) const;
  /// First failing axiom, or nullptr.
  const AxiomResult* first_failure() const;
  std::string to_text() const;
};

/// Checks every axiom required at `level` (cumulative along the chain) and
/// records each failure with its first counterexample. Pure and idempotent.
ValidationReport validate(const HyperStructure& structure, Level level);

/// Thrown by certify(); carries the full report.
class ValidationFailure : public Error {
 public:
  explicit ValidationFailure(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Validates and returns the structure labeled with the passed level.
HyperStructure certify(HyperStructure structure, Level level);

/// Labels a structure without checking it. Only for builders whose output is
/// guaranteed by a theorem (quotients of commutative rings by unit
/// subgroups); the result reports certified_by_construction().
HyperStructure assume_level(HyperStructure structure, Level level, bool kvector);

/// A + B as the union of a+b over a in A, b in B.
Subset hyper_sum(const Subset& a, const Subset& b, const HyperStructure& r);

/// Negation, requiring hypergroup level.
Element negate(Element x, const HyperStructure& r);

/// Order (h, q) of an element; h empty means infinite order.
struct ElementOrder {
  std::optional<std::size_t> principal;
  std::optional<std::size_t> secondary;

  bool infinite() const noexcept { return !principal.has_value(); }
  friend bool operator==(const ElementOrder&, const ElementOrder&) = default;
};

ElementOrder element_order(Element x, const HyperStructure& r);

/// A bijection fixing 0 and 1, multiplicative, and with f(a+b) = f(a)+f(b).
/// Both structures must be at hyperring level. `jobs` partitions the search;
/// the result is the first isomorphism in canonical order regardless of jobs.
std::optional<std::vector<Element>> is_isomorphic(const HyperStructure& r1,
                                                  const HyperStructure& r2,
                                                  unsigned jobs = 1);

/// True when f is a bijection satisfying the isomorphism conditions.
bool is_isomorphism(const HyperStructure& r1, const HyperStructure& r2,
                    std::span<const Element> f);

/// Multiplicative power signature (preperiod, period) of x^k, k >= 1.
std::pair<std::size_t, std::size_t> power_signature(const HyperStructure& r, Element x);

}  // namespace hyperforge
