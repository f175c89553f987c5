// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperforge/constructions.hpp"

#include <algorithm>
#include <limits>

#include "hyperforge/errors.hpp"

namespace hyperforge {

HyperStructure builtin(Builtin which) {
  using Lists = std::vector<std::vector<std::vector<Element>>>;
  if (which == Builtin::K) {
    Lists add = {{{0}, {1}}, {{1}, {0, 1}}};
    return certify(HyperStructure(Carrier(2), AddTable::from_lists(add),
                                  MulTable::from_rows({{0, 0}, {0, 1}})),
                   Level::hyperfield);
  }
  // 1 + 1 = 1, -1 - 1 = -1, 1 - 1 = {-1, 0, 1}
  Lists add = {{{0}, {1}, {2}}, {{1}, {1}, {0, 1, 2}}, {{2}, {0, 1, 2}, {2}}};
  return certify(HyperStructure(Carrier(3), AddTable::from_lists(add),
                                MulTable::from_rows({{0, 0, 0}, {0, 1, 2}, {0, 2, 1}})),
                 Level::hyperfield);
}

QuotientStructure quotient_by_subgroup(const FiniteRing& ring, const UnitSubgroup& g,
                                       const Bounds& bounds) {
  const std::size_t n = ring.size();
  for (Element x : g.members())
    if (x >= n || !ring.is_unit(x)) throw PreconditionError("subgroup is not inside the units of the ring");
  constexpr Element kUnset = std::numeric_limits<Element>::max();

  // Orbits in index order; the orbit of x is labeled by x, its smallest member.
  std::vector<Element> orbit_label(n, kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (orbit_label[x] != kUnset) continue;
    reps.push_back(x);
    for (Element u : g.members()) orbit_label[ring.mul(x, u)] = x;
  }
  const std::size_t classes = reps.size();
  if (classes > bounds.carrier_size)
    throw BoundError("quotient has " + std::to_string(classes) + " classes, above the carrier bound " +
                     std::to_string(bounds.carrier_size));

  // Class order: 0, 1, then by smallest representative.
  const Element zero_rep = orbit_label[ring.zero()], one_rep = orbit_label[ring.one()];
  std::vector<Element> ordered{zero_rep, one_rep};
  for (Element r : reps)
    if (r != zero_rep && r != one_rep) ordered.push_back(r);
  std::vector<Element> index_of_rep(n, kUnset);
  for (Element i = 0; i < classes; ++i) index_of_rep[ordered[i]] = i;
  std::vector<Element> class_of(n);
  for (Element x = 0; x < n; ++x) class_of[x] = index_of_rep[orbit_label[x]];

  AddTable add(classes);
  MulTable mul(classes);
  for (Element i = 0; i < classes; ++i)
    for (Element j = i; j < classes; ++j) {
      const Element x = ordered[i], y = ordered[j];
      for (Element u : g.members()) {
        const Element c = class_of[ring.add(x, ring.mul(y, u))];
        add.insert(i, j, c);
        if (i != j) add.insert(j, i, c);
      }
      mul(i, j) = mul(j, i) = class_of[ring.mul(x, y)];
    }

  HyperStructure raw(Carrier(classes), std::move(add), std::move(mul));
  HyperStructure built = [&] {
    if (classes <= bounds.exhaustive_validation) {
      const Level target = ring.is_field() ? Level::hyperfield : Level::hyperring;
      try {
        return certify(std::move(raw), target);
      } catch (const ValidationFailure& f) {
        throw InvariantViolation("quotient of " + ring.name() + " failed validation: " + f.report().to_text());
      }
    }
    const bool kv = raw.sum(1, 1) == Subset(classes, {0, 1});
    return assume_level(std::move(raw), ring.is_field() ? Level::hyperfield : Level::hyperring, kv);
  }();
  return QuotientStructure{std::move(built), std::make_shared<const FiniteRing>(ring), g,
                           std::move(ordered), std::move(class_of)};
}

bool subfield_criterion(const FiniteRing& ring, const UnitSubgroup& g) {
  if (g.order() <= 1) throw PreconditionError("subfield criterion needs G != {1}");
  // {0} u G is closed under products and inverses already; additive closure
  // of a finite set containing 0 makes it an additive subgroup.
  auto in = [&](Element x) { return x == ring.zero() || g.contains(x); };
  for (Element a : g.members())
    for (Element b : g.members())
      if (!in(ring.add(a, b))) return false;
  return true;
}

bool ordered_subfield_criterion(const FiniteRing& ring, const UnitSubgroup& g) {
  if (g.order() <= 1) throw PreconditionError("ordered subfield criterion needs G != {1}");
  if (g.contains(ring.neg(ring.one()))) throw PreconditionError("ordered subfield criterion needs -1 outside G");
  auto in_field = [&](Element x) {
    return x == ring.zero() || g.contains(x) || g.contains(ring.neg(x));
  };
  std::vector<Element> field{ring.zero()};
  for (Element a : g.members()) field.push_back(a), field.push_back(ring.neg(a));
  for (Element a : field)
    for (Element b : field)
      if (!in_field(ring.add(a, b))) return false;
  // Positive part closed under addition.
  for (Element a : g.members())
    for (Element b : g.members())
      if (!g.contains(ring.add(a, b))) return false;
  return true;
}

bool quotient_contains_sign(const QuotientStructure& q) {
  const auto& h = q.structure;
  const auto& r = *q.ring;
  const Element one = h.one(), minus = q.class_of[r.neg(r.one())], zero = h.zero();
  if (minus == one) return false;
  const std::size_t n = h.size();
  return h.sum(one, one) == Subset(n, {one}) && h.sum(minus, minus) == Subset(n, {minus}) &&
         h.sum(one, minus) == Subset(n, {zero, one, minus});
}

std::string_view to_string(LyndonVariant v) {
  switch (v) {
    case LyndonVariant::plain: return "plain";
    case LyndonVariant::nilpotent: return "nilpotent";
    case LyndonVariant::idempotent_pair: return "idempotent_pair";
  }
  return "?";
}

std::size_t lyndon_min_order(LyndonVariant variant) {
  switch (variant) {
    case LyndonVariant::plain: return 4;
    case LyndonVariant::nilpotent: return 3;
    case LyndonVariant::idempotent_pair: return 2;
  }
  return 4;
}

HyperStructure lyndon_table(const AbelianGroupSpec& spec, LyndonVariant variant) {
  const AbelianGroup h(spec);
  const std::size_t m = h.order();
  const std::size_t extra = variant == LyndonVariant::plain ? 0 : variant == LyndonVariant::nilpotent ? 1 : 2;
  const std::size_t n = m + 1 + extra;
  AddTable add(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (x == 0 || y == 0) {
        add.insert(x, y, x == 0 ? y : x);
      } else if (x == y) {
        add.insert(x, y, 0);
        add.insert(x, y, x);
      } else {
        for (Element z = 1; z < n; ++z)
          if (z != x && z != y) add.insert(x, y, z);
      }
    }
  MulTable mul(n);
  const Element first_extra = static_cast<Element>(m + 1);
  for (Element x = 1; x < n; ++x)
    for (Element y = 1; y < n; ++y) {
      const bool gx = x < first_extra, gy = y < first_extra;
      Element r = 0;
      if (gx && gy) {
        r = 1 + h.op(x - 1, y - 1);
      } else if (gx || gy) {
        r = gx ? y : x;  // au = ua = a
      } else if (variant == LyndonVariant::idempotent_pair) {
        r = x == y ? x : 0;  // e^2 = e, f^2 = f, ef = 0
      }  // a^2 = 0
      mul(x, y) = r;
    }
  return HyperStructure(Carrier(n), std::move(add), std::move(mul));
}

HyperStructure lyndon_extension(const AbelianGroupSpec& spec, LyndonVariant variant) {
  spec.check();
  if (spec.order() < lyndon_min_order(variant))
    throw PreconditionError("the " + std::string(to_string(variant)) + " construction needs a group of order at least " +
                            std::to_string(lyndon_min_order(variant)) + ", got " + spec.to_string());
  const Level level = variant == LyndonVariant::plain ? Level::hyperfield : Level::hyperring;
  return certify(lyndon_table(spec, variant), level);
}

QuotientStructure field_quotient(std::size_t q, std::size_t m, const Bounds& bounds) {
  auto [p, k] = prime_power(q);
  if (p == 0) throw PreconditionError(std::to_string(q) + " is not a prime power");
  if (m < 1) throw PreconditionError("field_quotient needs m >= 1");
  std::size_t order = 1;
  for (std::size_t i = 0; i < m; ++i) {
    order *= q;
    if (order > bounds.ring_size)
      throw BoundError("F_" + std::to_string(q) + "^" + std::to_string(m) + " exceeds the ring bound " +
                       std::to_string(bounds.ring_size));
  }
  FiniteRing field = finite_field(order, bounds);
  std::vector<Element> members;
  for (Element x = 1; x < field.size(); ++x)
    if (field.pow(x, q - 1) == field.one()) members.push_back(x);
  return quotient_by_subgroup(field, UnitSubgroup(field, members), bounds);
}

Element sign_of_integer(std::int64_t n) { return n > 0 ? 1 : n < 0 ? kSignMinusOne : 0; }

Element abs_to_K(Element s) {
  if (s > 2) throw IndexError("element " + std::to_string(s) + " is not in S");
  return s == 0 ? 0 : 1;
}

}  // namespace hyperforge
