// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <map>
#include <set>

#include "doctest.h"
#include "hyperforge/constructions.hpp"
#include "tables.hpp"

using namespace hyperforge;

namespace {

// Independent quotient: classes as explicit sets, sums as sets of classes.
struct NaiveQuotient {
  std::vector<std::set<Element>> classes;
  std::map<std::pair<std::size_t, std::size_t>, std::set<std::size_t>> sums;
};

NaiveQuotient naive_quotient(const FiniteRing& r, const std::vector<Element>& g) {
  NaiveQuotient q;
  std::map<Element, std::size_t> cls;
  for (Element x = 0; x < r.size(); ++x) {
    if (cls.count(x)) continue;
    std::set<Element> orbit;
    for (Element u : g) orbit.insert(r.mul(x, u));
    for (Element y : orbit) cls[y] = q.classes.size();
    q.classes.push_back(orbit);
  }
  for (std::size_t i = 0; i < q.classes.size(); ++i)
    for (std::size_t j = 0; j < q.classes.size(); ++j)
      for (Element a : q.classes[i])
        for (Element b : q.classes[j]) q.sums[{i, j}].insert(cls[r.add(a, b)]);
  return q;
}

}  // namespace

TEST_CASE("builtins") {
  auto k = builtin(Builtin::K);
  CHECK(k.sum(1, 1) == Subset(2, {0, 1}));
  CHECK(k.mul(1, 1) == 1);
  auto s = builtin(Builtin::S);
  CHECK(s.sum(1, kSignMinusOne) == Subset(3, {0, 1, 2}));
  CHECK(s.mul(kSignMinusOne, kSignMinusOne) == 1);
  CHECK(s.level() == Level::hyperfield);
}

TEST_CASE("quotients agree with a naive orbit computation") {
  for (auto& ring : small_ring_corpus(12)) {
    for (auto& g : unit_subgroups(ring)) {
      auto q = quotient_by_subgroup(ring, g);
      auto naive = naive_quotient(ring, g.members());
      REQUIRE(q.structure.size() == naive.classes.size());
      CHECK(q.structure.satisfies(Level::hyperring));
      // Map naive classes to quotient indices through any member.
      std::vector<Element> idx(naive.classes.size());
      for (std::size_t i = 0; i < naive.classes.size(); ++i) idx[i] = q.class_of[*naive.classes[i].begin()];
      for (auto& [key, set] : naive.sums) {
        Subset expect(q.structure.size());
        for (auto c : set) expect.insert(idx[c]);
        CHECK(q.structure.sum(idx[key.first], idx[key.second]) == expect);
      }
    }
  }
}

TEST_CASE("Z/6 modulo {1,5}") {
  auto z6 = zmod(6);
  auto q = quotient_by_subgroup(z6, UnitSubgroup(z6, {1, 5}));
  CHECK(q.structure.size() == 4);
  CHECK(q.representative == std::vector<Element>{0, 1, 2, 3});
  CHECK(q.class_of[5] == 1);
  CHECK(q.class_of[4] == 2);
  CHECK_FALSE(subfield_criterion(z6, UnitSubgroup(z6, {1, 5})));
}

TEST_CASE("F9 modulo F3^x is the transcribed five-element table") {
  auto q = field_quotient(3, 2);
  CHECK(q.structure.level() == Level::hyperfield);
  // alpha = 1 + i, i.e. ring element 1 + 3 = 4.
  const auto& f9 = *q.ring;
  std::vector<Element> label(5);  // transcribed label -> quotient index
  label[0] = 0;
  Element p = f9.one();
  for (int k = 0; k < 4; ++k) {
    label[1 + k] = q.class_of[p];
    p = f9.mul(p, 4);
  }
  auto e = testdata::ex5();
  for (Element a = 0; a < 5; ++a)
    for (Element b = 0; b < 5; ++b) {
      Subset expect(5);
      e.sum(a, b).for_each([&](Element c) { expect.insert(label[c]); });
      CHECK(q.structure.sum(label[a], label[b]) == expect);
      CHECK(q.structure.mul(label[a], label[b]) == label[e.mul(a, b)]);
    }
  CHECK(subfield_criterion(f9, q.subgroup));
}

TEST_CASE("F5 modulo all units is K") {
  auto f5 = zmod(5);
  auto q = quotient_by_subgroup(f5, UnitSubgroup(f5, {1, 2, 3, 4}));
  CHECK(same_tables(q.structure, builtin(Builtin::K)));
}

TEST_CASE("subfield criterion agrees with 1+1={0,1} in the quotient") {
  std::size_t checked = 0;
  for (auto& ring : small_ring_corpus(16))
    for (auto& g : unit_subgroups(ring)) {
      if (g.order() <= 1) continue;
      auto q = quotient_by_subgroup(ring, g);
      const bool direct = q.structure.sum(1, 1) == Subset(q.structure.size(), {0, 1});
      INFO(ring.name());
      CHECK(subfield_criterion(ring, g) == direct);
      ++checked;
    }
  CHECK(checked > 50);
  auto f4 = finite_field(4);
  CHECK(subfield_criterion(f4, UnitSubgroup(f4, f4.units())));
  CHECK_THROWS_AS(subfield_criterion(f4, UnitSubgroup(f4, {1})), PreconditionError);
}

TEST_CASE("no finite quotient contains S") {
  auto z7 = zmod(7);
  CHECK_FALSE(ordered_subfield_criterion(z7, UnitSubgroup(z7, {1, 2, 4})));
  CHECK_THROWS_AS(ordered_subfield_criterion(zmod(5), UnitSubgroup(zmod(5), {1})), PreconditionError);
  for (auto& ring : small_ring_corpus(16))
    for (auto& g : unit_subgroups(ring)) {
      if (g.order() <= 1 || g.contains(ring.neg(ring.one()))) continue;
      auto q = quotient_by_subgroup(ring, g);
      CHECK_FALSE(ordered_subfield_criterion(ring, g));
      CHECK(ordered_subfield_criterion(ring, g) == quotient_contains_sign(q));
    }
}

TEST_CASE("single-line extensions") {
  auto k5 = lyndon_extension(AbelianGroupSpec{{5}}, LyndonVariant::plain);
  CHECK(k5.size() == 6);
  CHECK(k5.level() == Level::hyperfield);
  for (Element x = 1; x < 6; ++x)
    for (Element y = 1; y < 6; ++y)
      if (x != y) {
        Subset expect = Subset::full(6);
        expect.erase(0), expect.erase(x), expect.erase(y);
        CHECK(k5.sum(x, y) == expect);
      }
  CHECK_THROWS_AS(lyndon_extension(AbelianGroupSpec{{3}}, LyndonVariant::plain), PreconditionError);
  // The refused tables really fail.
  for (std::size_t n : {2, 3})
    CHECK_FALSE(validate(lyndon_table(AbelianGroupSpec{{n}}, LyndonVariant::plain), Level::hypergroup).passed());
  CHECK_FALSE(validate(lyndon_table(AbelianGroupSpec{{2}}, LyndonVariant::nilpotent), Level::hypergroup).passed());
  auto nil = lyndon_extension(AbelianGroupSpec{{4}}, LyndonVariant::nilpotent);
  CHECK(nil.size() == 6);
  CHECK(nil.mul(5, 5) == 0);
  CHECK(nil.mul(5, 2) == 5);
  CHECK(nil.level() == Level::hyperring);
  auto idem = lyndon_extension(AbelianGroupSpec{{2}}, LyndonVariant::idempotent_pair);
  CHECK(idem.size() == 5);
  CHECK(idem.mul(3, 3) == 3);
  CHECK(idem.mul(3, 4) == 0);
  for (std::size_t n = 4; n <= 12; ++n)
    for (auto& spec : abelian_groups_of_order(n))
      CHECK(validate(lyndon_table(spec, LyndonVariant::plain), Level::hyperfield).passed());
}

TEST_CASE("field quotients") {
  for (auto [q, m] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {4, 2}, {3, 3}, {5, 2}, {2, 3}}) {
    auto fq = field_quotient(q, m);
    std::size_t qm = 1;
    for (std::size_t i = 0; i < m; ++i) qm *= q;
    const std::size_t expect = q == 2 ? qm : (qm - 1) / (q - 1) + 1;
    CHECK(fq.structure.size() == expect);
    CHECK(fq.structure.level() == Level::hyperfield);
  }
  auto f42 = field_quotient(4, 2);
  auto k5 = lyndon_extension(AbelianGroupSpec{{5}}, LyndonVariant::plain);
  CHECK(is_isomorphic(f42.structure, k5).has_value());
}

TEST_CASE("sign homomorphism from the integers") {
  auto s = builtin(Builtin::S);
  CHECK(sign_of_integer(5) == 1);
  CHECK(sign_of_integer(-3) == kSignMinusOne);
  CHECK(sign_of_integer(0) == 0);
  for (int a = -20; a <= 20; ++a)
    for (int b = -20; b <= 20; ++b) {
      CHECK(sign_of_integer(a * b) == s.mul(sign_of_integer(a), sign_of_integer(b)));
      CHECK(s.sum_contains(sign_of_integer(a), sign_of_integer(b), sign_of_integer(a + b)));
    }
  CHECK(abs_to_K(kSignMinusOne) == 1);
  CHECK(abs_to_K(0) == 0);
  CHECK(abs_to_K(1) == 1);
}
