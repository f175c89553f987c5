// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

// Projective geometries of K-vector spaces, incidence groups, and the
// relation and order encodings of hyperaddition.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperforge/config.hpp"
#include "hyperforge/core.hpp"

namespace hyperforge {

/// Points 0..points-1 and lines as sorted point lists, the list sorted.
struct IncidenceGeometry {
  std::size_t points = 0;
  std::vector<std::vector<Element>> lines;

  /// Sorts and checks: points in range, at least two points per line, no
  /// repeated points or lines.
  static IncidenceGeometry make(std::size_t points, std::vector<std::vector<Element>> lines);

  /// Index of the first line holding both points.
  std::optional<std::size_t> line_through(Element a, Element b) const;

  friend bool operator==(const IncidenceGeometry&, const IncidenceGeometry&) = default;
};

/// Nonzero elements of E in index order; point p of geometry_of(E) is
/// nonzero_elements(E)[p].
std::vector<Element> nonzero_elements(const HyperStructure& e);

/// Lines L(x, y) = (x + y) u {x, y}. Requires K-vector validation.
IncidenceGeometry geometry_of(const HyperStructure& e);

struct AxiomVerdict {
  bool passed = true;
  std::string counterexample;  // empty when passed
};

struct GeometryReport {
  AxiomVerdict p1, p2, p3, p3_strong;
  bool projective() const { return p1.passed && p2.passed && p3_strong.passed; }
  std::string to_text() const;
};

GeometryReport check_projective_axioms(const IncidenceGeometry& g, unsigned jobs = 1);

/// Projective dimension: size of a minimal generating set minus one.
std::size_t geometry_dimension(const IncidenceGeometry& g);

/// Hypergroup on {0} u points (point p is carrier element p + 1) with
/// x + y = L(x, y) \ {x, y}, x + x = {0, x}; no multiplication. Throws
/// PreconditionError naming the first failing axiom.
HyperStructure kvector_from_geometry(const IncidenceGeometry& g);

enum class Desargues { yes, no, vacuous };
std::string_view to_string(Desargues d);

struct DesarguesResult {
  Desargues verdict = Desargues::vacuous;
  std::size_t configurations = 0;  // centrally perspective pairs examined
  std::string counterexample;
};

/// Vacuous for a single line and for dimension >= 3; otherwise checks every
/// pair of triangles in perspective from a point for a perspective axis.
DesarguesResult is_desarguesian(const IncidenceGeometry& g, unsigned jobs = 1);

/// True iff every permutation maps lines to lines. Throws PreconditionError
/// unless the permutations act simply transitively on points.
bool incidence_group_check(const IncidenceGeometry& g, const std::vector<std::vector<Element>>& perms);

/// Hyperfield on {0} u G for a group G on the points (table[p][q] = pq)
/// whose left and right translations are collineations. The identity point
/// becomes the carrier's one. Throws PreconditionError otherwise.
HyperStructure hyperfield_from_incidence_group(const IncidenceGeometry& g,
                                               const std::vector<std::vector<Element>>& table,
                                               Element identity);

/// Equivalence relation as class labels; each class is labeled by its
/// smallest member.
struct Partition {
  std::vector<Element> class_of;

  static Partition from_classes(std::size_t n, const std::vector<std::vector<Element>>& classes);
  std::vector<std::vector<Element>> classes() const;
  std::vector<Element> class_members(Element x) const;
  bool related(Element x, Element y) const { return class_of[x] == class_of[y]; }
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// For each point a, the relation R_a on {zero} u points: {0, a} is a class
/// and distinct x, y outside it are related iff a lies on L(x, y).
struct RelationFamily {
  std::size_t size = 0;      // |points| + 1
  Element zero = 0;
  std::vector<Element> points;
  std::vector<Partition> relations;  // relations[i] belongs to points[i]
};

RelationFamily relation_family(const HyperStructure& e);
/// Carrier labels as in kvector_from_geometry. Requires P1.
RelationFamily relation_family(const IncidenceGeometry& g);

struct CommuteResult {
  bool commute = true;
  std::string counterexample;
};

/// R_a o R_b = R_b o R_a for every pair.
CommuteResult relations_commute(const RelationFamily& f, unsigned jobs = 1);

/// Lines are the traces on the points of the class of 0 under R_a o R_b.
/// Throws PreconditionError naming the violated condition and its witness.
IncidenceGeometry geometry_from_relations(const RelationFamily& f);

/// First x with T_b(T_a(x)) != T_a(T_b(x)), where T_a(x) is the class of x.
std::optional<Element> composition_mismatch(const Partition& a, const Partition& b);

/// x ~ y iff a^-1 x S a^-1 y.
Partition conjugate_relation(const MulTable& mul, Element one, const Partition& s, Element a);

/// The conjugates a S a^-1 of one relation S on a monoid H u {0}.
RelationFamily conjugate_family(const MulTable& mul, Element zero, const Partition& s);

/// x ~ y iff x u (x + 1) = y u (y + 1), checked against "x = y or x in
/// y + 1" and against its conjugates by units. Requires 1 + 1 = {0, 1}.
Partition canonical_relation(const HyperStructure& r);

/// Unvalidated structure on a monoid H u {0} with 0 + y = y and
/// x + y = x s(y / x) otherwise. Requires every nonzero element invertible.
HyperStructure homogeneous_structure(const MulTable& mul, Element zero, Element one, const std::vector<Subset>& s);

/// The hyperfield on H u {0} with x + y = x s(y / x), s(x) = S(x) \ {x},
/// s(1) = {0, 1}. `mul` is the monoid table with `zero` and `one`.
HyperStructure rebuild_addition_from_relation(const MulTable& mul, Element zero, Element one,
                                              const Partition& s);

/// up[x] = {y : x <= y}.
struct PartialOrder {
  std::vector<Subset> up;
  bool leq(Element x, Element y) const { return up[x].contains(y); }
  friend bool operator==(const PartialOrder&, const PartialOrder&) = default;
};

/// Checks reflexivity, antisymmetry and transitivity; returns a witness on failure.
std::optional<std::string> order_violation(const PartialOrder& order);

/// x <= y iff y in x + 1 or y = x. Requires a copy of S inside R.
PartialOrder canonical_order(const HyperStructure& r);

/// The element playing -1 when S sits inside R, if it does.
std::optional<Element> sign_copy(const HyperStructure& r);

/// Hyperfield on H u {0} with x + y = x s(y / x) from an order and an
/// involution epsilon. Throws PreconditionError naming the failed condition.
HyperStructure rebuild_addition_from_order(const MulTable& mul, Element zero, Element one, Element epsilon,
                                           const PartialOrder& order);

/// Condition check behind rebuild_addition_from_order, without building.
std::optional<std::string> order_rebuild_violation(const MulTable& mul, Element zero, Element one,
                                                   Element epsilon, const PartialOrder& order);

struct DifferenceSet {
  std::size_t modulus = 0;
  std::vector<Element> residues;  // sorted
  friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;
};

bool is_difference_set(const DifferenceSet& d);

/// The lexicographically least t D + s over units t and shifts s.
DifferenceSet canonical_difference_set(const DifferenceSet& d);

/// One representative per class under translations and multipliers.
std::vector<DifferenceSet> difference_set_search(std::size_t n, std::size_t k,
                                                 const Bounds& bounds = default_bounds());

struct CyclicPlane {
  IncidenceGeometry geometry;       // lines are the translates of D
  std::optional<HyperStructure> hyperfield;
  std::string refusal;              // why no hyperfield, when absent
};

/// Carrier of the hyperfield: 0 is zero, residue r is element r + 1.
CyclicPlane plane_from_difference_set(const DifferenceSet& d);

}  // namespace hyperforge
