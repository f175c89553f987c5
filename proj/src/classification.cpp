// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperforge/classification.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "hyperforge/errors.hpp"
#include "hyperforge/homomorphisms.hpp"
#include "hyperforge/parallel.hpp"

namespace hyperforge {

namespace {

using Mask = std::uint64_t;

// {0} u G with carrier element 1 + g for g.
MulTable group_with_zero(const AbelianGroup& g) {
  MulTable mul(g.order() + 1);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) mul(a + 1, b + 1) = g.op(a, b) + 1;
  return mul;
}

std::vector<Element> carrier_inverses(const AbelianGroup& g) {
  std::vector<Element> inv(g.order() + 1, 0);
  for (Element a = 0; a < g.order(); ++a) inv[a + 1] = g.inverse(a) + 1;
  return inv;
}

// T_b o T_a = T_a o T_b for relations given by the class mask of each element.
bool masks_commute(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    Mask ab = 0, ba = 0;
    for (Mask m = a[x]; m; m &= m - 1) ab |= b[std::countr_zero(m)];
    for (Mask m = b[x]; m; m &= m - 1) ba |= a[std::countr_zero(m)];
    if (ab != ba) return false;
  }
  return true;
}

Mask multiply_mask(const MulTable& mul, Element a, Mask m) {
  Mask out = 0;
  for (; m; m &= m - 1) out |= Mask{1} << mul(a, static_cast<Element>(std::countr_zero(m)));
  return out;
}

// Relation {0,1} plus the given blocks; true when it commutes with every
// conjugate a S a^-1.
bool commutes_with_conjugates(const MulTable& mul, const std::vector<Element>& inv, const std::vector<Mask>& blocks) {
  const std::size_t n = mul.size();
  std::vector<Mask> cls(n);
  std::vector<std::size_t> block_of(n);
  cls[0] = cls[1] = 0b11;
  block_of[0] = block_of[1] = blocks.size();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (Mask m = blocks[i]; m; m &= m - 1) {
      const auto x = std::countr_zero(m);
      cls[x] = blocks[i];
      block_of[x] = i;
    }
  std::vector<Mask> mapped(blocks.size() + 1), conj(n);
  for (Element a = 2; a < n; ++a) {
    for (std::size_t i = 0; i < blocks.size(); ++i) mapped[i] = multiply_mask(mul, a, blocks[i]);
    mapped[blocks.size()] = multiply_mask(mul, a, 0b11);
    for (Element x = 0; x < n; ++x) conj[x] = mapped[block_of[mul(inv[a], x)]];
    if (!masks_commute(cls, conj)) return false;
  }
  return true;
}

struct BlockSearch {
  const MulTable& mul;
  const std::vector<Element>& inv;
  std::size_t candidates = 0;
  std::vector<std::vector<Mask>> found;

  void extend(Mask remaining, std::vector<Mask>& blocks) {
    if (remaining == 0) {
      ++candidates;
      if (commutes_with_conjugates(mul, inv, blocks)) found.push_back(blocks);
      return;
    }
    const Mask low = remaining & -remaining;
    const Mask rest = remaining & ~low;
    // Submasks of `rest` with at least two members, leaving nothing or at least three.
    for (Mask t = rest;; t = (t - 1) & rest) {
      const int size = std::popcount(t), left = std::popcount(rest & ~t);
      if (size >= 2 && (left == 0 || left >= 3)) {
        blocks.push_back(low | t);
        extend(rest & ~t, blocks);
        blocks.pop_back();
      }
      if (t == 0) break;
    }
  }
};

std::vector<Mask> top_level_blocks(Mask all) {
  std::vector<Mask> out;
  const Mask low = all & -all, rest = all & ~low;
  for (Mask t = rest;; t = (t - 1) & rest) {
    const int size = std::popcount(t), left = std::popcount(rest & ~t);
    if (size >= 2 && (left == 0 || left >= 3)) out.push_back(low | t);
    if (t == 0) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Partition partition_of(std::size_t n, const std::vector<Mask>& blocks) {
  std::vector<std::vector<Element>> classes{{0, 1}};
  for (Mask b : blocks) {
    std::vector<Element> c;
    for (Mask m = b; m; m &= m - 1) c.push_back(static_cast<Element>(std::countr_zero(m)));
    classes.push_back(std::move(c));
  }
  return Partition::from_classes(n, classes);
}

bool is_prime_power(std::size_t q) {
  if (q < 2) return false;
  std::size_t p = 2;
  while (q % p) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

void label_entry(ClassificationEntry& e, const Bounds& bounds, unsigned jobs) {
  const auto g = geometry_of(e.structure);
  e.dimension = geometry_dimension(g);
  if (e.dimension <= 1) {
    const auto model = lyndon_extension(e.group, LyndonVariant::plain);
    if (auto iso = is_isomorphic(e.structure, model, jobs)) {
      e.label = ExtensionLabel::lyndon;
      e.witness = std::move(*iso);
    } else {
      e.note = "single line not isomorphic to K[" + e.group.to_string() + "]";
    }
    return;
  }
  const auto desargues = is_desarguesian(g, jobs);
  if (desargues.verdict == Desargues::no) {
    e.label = ExtensionLabel::non_desarguesian_plane;
    e.note = desargues.counterexample;
    return;
  }
  const std::size_t m = e.dimension + 1, points = e.structure.size() - 1;
  for (std::size_t q = 3;; ++q) {
    std::size_t qm = 1, count = 0;
    for (std::size_t i = 0; i < m; ++i) count += qm, qm *= q;
    if (count > points) break;
    if (count != points || !is_prime_power(q) || qm > bounds.ring_size) continue;
    const auto model = field_quotient(q, m, bounds);
    if (auto iso = is_isomorphic(e.structure, model.structure, jobs)) {
      e.label = ExtensionLabel::field_quotient;
      e.field = std::pair{q, m};
      e.witness = std::move(*iso);
      return;
    }
  }
  e.note = "Desarguesian geometry of dimension " + std::to_string(e.dimension) + " matches no field quotient";
}

// Keeps the first of each isomorphism class, in input order.
std::vector<ClassificationEntry> deduplicate(std::vector<ClassificationEntry> all, unsigned jobs) {
  std::vector<ClassificationEntry> kept;
  for (auto& e : all) {
    bool seen = false;
    for (const auto& k : kept)
      if (k.group == e.group && is_isomorphic(k.structure, e.structure, jobs)) {
        seen = true;
        break;
      }
    if (!seen) kept.push_back(std::move(e));
  }
  return kept;
}

void check_carrier_size(std::size_t n, std::size_t lo, std::size_t bound, const char* what) {
  if (n < lo) throw PreconditionError(std::string(what) + " need at least " + std::to_string(lo) + " elements");
  if (n > bound || n > 63)
    throw BoundError(std::string(what) + " of size " + std::to_string(n) + " exceed the bound " + std::to_string(bound));
}

}  // namespace

std::string_view to_string(ExtensionLabel label) {
  switch (label) {
    case ExtensionLabel::lyndon: return "lyndon";
    case ExtensionLabel::field_quotient: return "field-quotient";
    case ExtensionLabel::non_desarguesian_plane: return "non-desarguesian-plane";
    case ExtensionLabel::unknown: return "unknown";
  }
  return "?";
}

ExtensionSearch enumerate_K_extensions(std::size_t n, const Bounds& bounds, unsigned jobs) {
  check_carrier_size(n, 3, bounds.k_extension_size, "extensions of K");
  ExtensionSearch search;
  std::vector<ClassificationEntry> all;
  for (const auto& spec : abelian_groups_of_order(n - 1)) {
    const AbelianGroup group(spec);
    const MulTable mul = group_with_zero(group);
    const auto inv = carrier_inverses(group);
    const Mask free_elements = ((Mask{1} << n) - 1) & ~Mask{0b11};
    const auto tops = top_level_blocks(free_elements);
    auto parts = parallel_map<BlockSearch>(tops.size(), jobs, [&](std::size_t i) {
      BlockSearch s{mul, inv, 0, {}};
      std::vector<Mask> blocks{tops[i]};
      s.extend(free_elements & ~tops[i], blocks);
      return s;
    });
    for (auto& part : parts) {
      search.candidates += part.candidates;
      for (const auto& blocks : part.found) {
        const Partition relation = partition_of(n, blocks);
        HyperStructure r = rebuild_addition_from_relation(mul, 0, 1, relation);
        ++search.survivors;
        all.push_back(ClassificationEntry{std::move(r), spec, relation, 0, ExtensionLabel::unknown, {}, {}, {}});
      }
    }
  }
  search.entries = deduplicate(std::move(all), jobs);
  for (auto& e : search.entries) label_entry(e, bounds, jobs);
  return search;
}

namespace {

// Backtracking over up-sets of the free elements. Elements 0, 1 and epsilon
// have fixed up-sets; every assignment is checked against the order laws
// and the reversal x <= y iff eps y <= eps x among assigned elements.
struct OrderSearch {
  const MulTable& mul;
  Element eps;
  std::size_t n;
  std::vector<Element> order;  // assignment order of free elements
  std::vector<Mask> up;
  std::vector<bool> assigned;
  std::size_t candidates = 0;
  std::vector<std::vector<Mask>> found;

  bool leq_known(Element x, Element y, bool& value) const {
    if (!assigned[x]) return false;
    value = (up[x] >> y) & 1;
    return true;
  }

  bool consistent(Element x) const {
    const Mask ux = up[x];
    if (ux == (Mask{1} << x)) return false;  // s(x) would be empty
    for (Element y = 0; y < n; ++y) {
      if (!assigned[y] || y == x) continue;
      const bool x_le_y = (ux >> y) & 1, y_le_x = (up[y] >> x) & 1;
      if (x_le_y && y_le_x) return false;
      if (x_le_y && (up[y] & ~ux)) return false;
      if (y_le_x && (ux & ~up[y])) return false;
    }
    const Element ex = mul(eps, x);
    for (Element y = 0; y < n; ++y) {
      const Element ey = mul(eps, y);
      bool a, b;
      // x <= y iff eps y <= eps x, and y <= x iff eps x <= eps y.
      if (leq_known(x, y, a) && leq_known(ey, ex, b) && a != b) return false;
      if (leq_known(y, x, a) && leq_known(ex, ey, b) && a != b) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (depth == order.size()) {
      PartialOrder o;
      for (Element x = 0; x < n; ++x) {
        Subset s(n);
        for (Mask m = up[x]; m; m &= m - 1) s.insert(static_cast<Element>(std::countr_zero(m)));
        o.up.push_back(std::move(s));
      }
      if (!order_rebuild_violation(mul, 0, 1, eps, o)) found.push_back(up);
      return;
    }
    const Element x = order[depth];
    const Mask all = (Mask{1} << n) - 1, others = all & ~(Mask{1} << x);
    assigned[x] = true;
    for (Mask t = others;; t = (t - 1) & others) {
      up[x] = t | (Mask{1} << x);
      ++candidates;
      if (consistent(x)) extend(depth + 1);
      if (t == 0) break;
    }
    assigned[x] = false;
    up[x] = 0;
  }
};

}  // namespace

ExtensionSearch enumerate_S_extensions(std::size_t n, const Bounds& bounds, unsigned jobs) {
  check_carrier_size(n, 4, bounds.s_extension_size, "proper extensions of S");
  ExtensionSearch search;
  std::vector<ClassificationEntry> all;
  for (const auto& spec : abelian_groups_of_order(n - 1)) {
    const AbelianGroup group(spec);
    const MulTable mul = group_with_zero(group);
    std::vector<Element> involutions;
    for (Element a = 0; a < group.order(); ++a)
      if (group.element_order(a) == 2) involutions.push_back(a + 1);
    auto parts = parallel_map<OrderSearch>(involutions.size(), jobs, [&](std::size_t i) {
      const Element eps = involutions[i];
      OrderSearch s{mul, eps, n, {}, std::vector<Mask>(n, 0), std::vector<bool>(n, false), 0, {}};
      s.up[0] = 0b11;
      s.up[1] = 0b10;
      s.up[eps] = (Mask{1} << eps) | 0b11;
      s.assigned[0] = s.assigned[1] = s.assigned[eps] = true;
      // Free elements paired with their epsilon multiples.
      std::vector<bool> queued(n, false);
      for (Element x = 2; x < n; ++x) {
        if (x == eps || queued[x]) continue;
        const Element ex = mul(eps, x);
        s.order.push_back(x);
        s.order.push_back(ex);
        queued[x] = queued[ex] = true;
      }
      s.extend(0);
      return s;
    });
    for (std::size_t i = 0; i < parts.size(); ++i) {
      search.candidates += parts[i].candidates;
      for (const auto& up : parts[i].found) {
        PartialOrder o;
        for (Element x = 0; x < n; ++x) {
          Subset s(n);
          for (Mask m = up[x]; m; m &= m - 1) s.insert(static_cast<Element>(std::countr_zero(m)));
          o.up.push_back(std::move(s));
        }
        HyperStructure r = rebuild_addition_from_order(mul, 0, 1, involutions[i], o);
        ++search.survivors;
        all.push_back(ClassificationEntry{std::move(r), spec, {}, 0, ExtensionLabel::unknown, {}, {},
                                          "finite extension of S"});
      }
    }
  }
  search.entries = deduplicate(std::move(all), jobs);
  return search;
}

std::vector<HyperStructure> exhaustive_homogeneous_extensions(Builtin base, std::size_t n, std::size_t limit) {
  if (base != Builtin::K && base != Builtin::S) throw PreconditionError("base must be K or S");
  if (n < 3 || n > 63) throw PreconditionError("carrier size must lie in 3..63");
  std::vector<HyperStructure> out;
  std::size_t total = 0;
  for (const auto& spec : abelian_groups_of_order(n - 1)) {
    const AbelianGroup group(spec);
    const MulTable mul = group_with_zero(group);
    const auto inv = carrier_inverses(group);
    std::vector<Element> negatives;  // the element playing -1
    if (base == Builtin::K) {
      negatives.push_back(1);
    } else {
      for (Element a = 0; a < group.order(); ++a)
        if (group.element_order(a) == 2) negatives.push_back(a + 1);
    }
    for (Element minus : negatives) {
      std::vector<Subset> s(n, Subset(n));
      s[0] = Subset(n, {1});
      s[1] = base == Builtin::K ? Subset(n, {0, 1}) : Subset(n, {1});
      std::vector<Element> free;
      if (base == Builtin::S) s[minus] = Subset(n, {0, 1, minus});
      for (Element h = 2; h < n; ++h)
        if (h != minus) free.push_back(h);
      const std::size_t options = (std::size_t{1} << n) - 1;  // nonempty subsets
      std::size_t count = 1;
      for (std::size_t i = 0; i < free.size(); ++i) {
        if (count > limit / options) throw BoundError("too many homogeneous tables to try");
        count *= options;
      }
      total += count;
      if (total > limit) throw BoundError("too many homogeneous tables to try");
      std::vector<std::size_t> digit(free.size(), 0);
      for (std::size_t c = 0; c < count; ++c) {
        for (std::size_t i = 0; i < free.size(); ++i) {
          s[free[i]] = Subset(n);
          const std::size_t bits = digit[i] + 1;
          for (Element y = 0; y < n; ++y)
            if (bits >> y & 1) s[free[i]].insert(y);
        }
        // Cheap necessary conditions before full validation: commutativity
        // h s(1/h) = s(h) and 0 in s(h) only for h = -1.
        bool plausible = true;
        for (Element h : free) {
          if (s[h].contains(0)) plausible = false;
          Subset turned(n);
          s[inv[h]].for_each([&](Element y) { turned.insert(mul(h, y)); });
          if (!(turned == s[h])) plausible = false;
        }
        if (plausible) {
          auto r = homogeneous_structure(mul, 0, 1, s);
          if (validate(r, Level::hyperfield).passed()) {
            auto certified = certify(std::move(r), Level::hyperfield);
            bool seen = false;
            for (const auto& k : out) seen = seen || is_isomorphic(k, certified).has_value();
            if (!seen) out.push_back(std::move(certified));
          }
        }
        for (std::size_t i = 0; i < free.size(); ++i) {
          if (++digit[i] < options) break;
          digit[i] = 0;
        }
      }
    }
  }
  return out;
}

Dimension2Class classify_dimension2(const HyperStructure& r, unsigned jobs) {
  if (!r.satisfies(Level::hyperring) || !r.commutative())
    throw PreconditionError("classify_dimension2 needs a commutative hyperring");
  if (!(r.sum(r.one(), r.one()) == Subset(r.size(), {r.zero(), r.one()})))
    throw PreconditionError("1 + 1 != {0, 1}: K is not contained");
  if (!r.is_kvector()) throw PreconditionError("additive structure is not a K-vector space");
  const std::size_t dim = k_dimension(r);
  if (dim != 2) throw PreconditionError("K-dimension is " + std::to_string(dim) + ", not 2");
  std::vector<Element> units;
  for (Element x = 0; x < r.size(); ++x)
    for (Element y = 0; y < r.size(); ++y)
      if (r.mul(x, y) == r.one()) {
        units.push_back(x);
        break;
      }
  std::vector<Element> index(r.size(), 0);
  for (Element i = 0; i < units.size(); ++i) index[units[i]] = i;
  std::vector<std::vector<Element>> table(units.size(), std::vector<Element>(units.size()));
  for (Element i = 0; i < units.size(); ++i)
    for (Element j = 0; j < units.size(); ++j) table[i][j] = index[r.mul(units[i], units[j])];
  const auto group = identify_abelian_group(table, index[r.one()]);
  for (auto variant : {LyndonVariant::plain, LyndonVariant::nilpotent, LyndonVariant::idempotent_pair}) {
    if (group.order() < lyndon_min_order(variant)) continue;
    const auto model = lyndon_extension(group, variant);
    if (model.size() != r.size()) continue;
    if (auto iso = is_isomorphic(r, model, jobs)) return Dimension2Class{variant, group, std::move(*iso)};
  }
  throw InvariantViolation("no presentation K[H], K[H]^(1), K[H]^(2) with H = " + group.to_string() + " matches");
}

std::string classification_table(std::size_t n, const ExtensionSearch& search) {
  const std::size_t count = search.entries.size();
  std::string out = "n=" + std::to_string(n) + ": " + std::to_string(count) +
                    (count == 1 ? " structure" : " structures") + " (candidates " +
                    std::to_string(search.candidates) + ", survivors " + std::to_string(search.survivors) + ")\n";
  for (const auto& e : search.entries) {
    out += "  H=" + e.group.to_string() + " dim=" + std::to_string(e.dimension) + " label=" + std::string(to_string(e.label));
    if (e.label == ExtensionLabel::lyndon) out += " K[" + e.group.to_string() + "]";
    if (e.field)
      out += " F_" + std::to_string(e.field->first) + "^" + std::to_string(e.field->second) + "/F_" +
             std::to_string(e.field->first) + "^x";
    if (!e.note.empty()) out += " note: " + e.note;
    out += "\n";
  }
  return out;
}

}  // namespace hyperforge
