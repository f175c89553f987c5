// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <set>

#include "doctest.h"
#include "hyperforge/errors.hpp"
#include "hyperforge/homomorphisms.hpp"
#include "tables.hpp"

using namespace hyperforge;

namespace {

bool naive_hom(const HyperStructure& s, const HyperStructure& t, const std::vector<Element>& f) {
  if (f[0] != 0 || f[1] != 1) return false;
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b) {
      if (f[s.mul(a, b)] != t.mul(f[a], f[b])) return false;
      const Subset target = t.sum(f[a], f[b]);
      for (Element c : s.sum(a, b).elements())
        if (!target.contains(f[c])) return false;
    }
  return true;
}

// Every map of the carrier, in lexicographic order.
std::vector<std::vector<Element>> brute_homs(const HyperStructure& s, const HyperStructure& t) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> f(s.size(), 0);
  while (true) {
    if (naive_hom(s, t, f)) out.push_back(f);
    std::size_t i = s.size();
    while (i > 0 && ++f[i - 1] == t.size()) f[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<std::vector<Element>> maps_of(const HomEnumeration& e) {
  std::vector<std::vector<Element>> out;
  for (const auto& h : e.homs) out.push_back(h.map);
  return out;
}

std::vector<HyperStructure> small_structures() {
  std::vector<HyperStructure> out;
  out.push_back(builtin(Builtin::K));
  out.push_back(builtin(Builtin::S));
  out.push_back(certify(testdata::ex5(), Level::hyperfield));
  out.push_back(lyndon_extension(AbelianGroupSpec{{3}}, LyndonVariant::nilpotent));
  out.push_back(lyndon_extension(AbelianGroupSpec{{2}}, LyndonVariant::idempotent_pair));
  out.push_back(lyndon_extension(AbelianGroupSpec{{4}}, LyndonVariant::plain));
  for (std::size_t n : {5, 6, 7}) {
    FiniteRing r = zmod(n);
    for (const auto& g : unit_subgroups(r)) {
      auto q = quotient_by_subgroup(r, g);
      if (q.structure.size() <= 5) out.push_back(std::move(q.structure));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("hom search agrees with brute force on small structures") {
  const auto all = small_structures();
  REQUIRE(all.size() >= 12);
  std::size_t pairs = 0, nonempty = 0;
  for (const auto& s : all)
    for (const auto& t : all) {
      const auto expected = brute_homs(s, t);
      const auto got = enumerate_homs(s, t);
      CHECK(got.complete);
      CHECK(maps_of(got) == expected);
      ++pairs;
      nonempty += !expected.empty();
    }
  CHECK(pairs == all.size() * all.size());
  CHECK(nonempty > all.size());
}

TEST_CASE("known hom sets") {
  const auto k = builtin(Builtin::K);
  const auto s = builtin(Builtin::S);
  const auto ex5 = certify(testdata::ex5(), Level::hyperfield);

  auto sk = enumerate_homs(s, k);
  REQUIRE(sk.homs.size() == 1);
  CHECK(sk.homs[0].map == std::vector<Element>{0, 1, 1});
  CHECK(sk.homs[0].is_epi);
  CHECK_FALSE(sk.homs[0].is_iso);

  CHECK(enumerate_homs(k, s).homs.empty());  // 1 + 1 contains 0, but not in S

  auto ke = enumerate_homs(k, ex5);
  REQUIRE(ke.homs.size() == 1);
  CHECK(ke.homs[0].map == std::vector<Element>{0, 1});
  CHECK_FALSE(ke.homs[0].is_epi);

  auto id = make_witness(ex5, ex5, {0, 1, 2, 3, 4});
  CHECK(id.is_hom);
  CHECK(id.is_epi);
  CHECK(id.is_iso);

  auto bad = make_witness(s, k, {0, 1, 0});
  CHECK_FALSE(bad.is_hom);
  CHECK_FALSE(is_epimorphism(bad));
}

TEST_CASE("endomorphisms of F27 / F3^x are the power maps that respect addition") {
  auto q = field_quotient(3, 3);
  const auto& h = q.structure;
  const auto& r = *q.ring;
  REQUIRE(h.size() == 14);
  // The nonzero classes form a cyclic group of order 13, so any
  // multiplicative self-map fixing 0 is x -> x^k on representatives.
  std::set<std::vector<Element>> expected;
  for (std::size_t k = 0; k < 13; ++k) {
    std::vector<Element> f(h.size());
    f[0] = 0;
    for (Element c = 1; c < h.size(); ++c) f[c] = q.class_of[r.pow(q.representative[c], k)];
    if (naive_hom(h, h, f)) expected.insert(f);
  }
  // Frobenius powers 1, 3, 9 and the map onto {0, 1}.
  CHECK(expected.size() == 4);
  for (unsigned jobs : {1u, 4u}) {
    auto got = enumerate_homs(h, h, std::size_t{1} << 22, jobs);
    CHECK(got.complete);
    auto maps = maps_of(got);
    CHECK(std::set<std::vector<Element>>(maps.begin(), maps.end()) == expected);
    CHECK(std::is_sorted(maps.begin(), maps.end()));
  }
  // Composites of endomorphisms are endomorphisms.
  for (const auto& f : expected)
    for (const auto& g : expected) {
      std::vector<Element> fg(h.size());
      for (Element x = 0; x < h.size(); ++x) fg[x] = f[g[x]];
      CHECK(expected.count(fg) == 1);
    }
}

TEST_CASE("budget exhaustion is reported, independent of jobs") {
  auto e = lyndon_extension(AbelianGroupSpec{{2, 2, 2}}, LyndonVariant::plain);
  auto a = enumerate_homs(e, e, 3, 1);
  auto b = enumerate_homs(e, e, 3, 3);
  CHECK_FALSE(a.complete);
  CHECK(enumerate_homs(e, e).complete);
  CHECK(a.nodes == b.nodes);
  CHECK(maps_of(a) == maps_of(b));
  CHECK_THROWS_AS(enumerate_homs(e, e, 0), PreconditionError);
}

TEST_CASE("K-dimension") {
  const auto k = builtin(Builtin::K);
  CHECK(k_dimension(k) == 1);
  CHECK(k_dimension(certify(testdata::ex5(), Level::hyperfield)) == 2);
  CHECK(k_dimension(field_quotient(3, 2).structure) == 2);
  CHECK(k_dimension(field_quotient(3, 3).structure) == 3);
  CHECK(k_dimension(field_quotient(4, 3).structure) == 3);
  CHECK(k_dimension(field_quotient(4, 2).structure) == 2);
  CHECK_THROWS_AS(k_dimension(builtin(Builtin::S)), PreconditionError);

  // The greedy join agrees with closure under addition, and a basis spans
  // the whole structure while no proper subset of it does.
  for (auto [qq, m] : {std::pair{3, 3}, {4, 3}, {5, 2}}) {
    auto e = field_quotient(qq, m).structure;
    const auto basis = k_basis(e);
    CHECK(k_span(e, Subset::from(e.size(), basis)) == Subset::full(e.size()));
    for (std::size_t drop = 0; drop < basis.size(); ++drop) {
      std::vector<Element> rest = basis;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK(k_span(e, Subset::from(e.size(), rest)).count() < e.size());
    }
    // Span of two distinct points is the line through them: q + 2 elements.
    CHECK(k_span(e, Subset(e.size(), {1, 2})).count() == static_cast<std::size_t>(qq) + 2);
    CHECK(k_dimension(e, Subset(e.size(), {1, 2})) == 2);
  }
}

TEST_CASE("lifting homs between field quotients") {
  auto q = field_quotient(3, 3);
  const auto& h = q.structure;
  const auto& r = *q.ring;
  auto homs = enumerate_homs(h, h);
  std::size_t lifted = 0, lines = 0;
  for (const auto& w : homs.homs) {
    auto res = lift_hom(w, q, q);
    if (res.kind == LiftResult::Kind::line_ranged) {
      ++lines;
      CHECK(res.range_dimension <= 2);
      continue;
    }
    ++lifted;
    CHECK(res.range_dimension == 3);
    // The lift is a Frobenius power, and it induces w.
    bool frobenius = false;
    for (std::size_t k : {1, 3, 9}) {
      bool match = true;
      for (Element x = 0; x < r.size(); ++x) match = match && res.ring_map[x] == r.pow(x, k);
      frobenius = frobenius || match;
    }
    CHECK(frobenius);
    for (Element x = 0; x < r.size(); ++x) CHECK(q.class_of[res.ring_map[x]] == w.map[q.class_of[x]]);
  }
  CHECK(lifted == 3);
  CHECK(lines == 1);

  // Over F4: the Frobenius of F64 fixing F4 is x -> x^4.
  auto q4 = field_quotient(4, 3);
  auto homs4 = enumerate_homs(q4.structure, q4.structure);
  std::size_t lifted4 = 0;
  for (const auto& w : homs4.homs)
    lifted4 += lift_hom(w, q4, q4).kind == LiftResult::Kind::lifted;
  CHECK(lifted4 == 6);  // semilinear automorphisms: x -> x^(2^i)

  // K = F2 is too small for a lift.
  auto q2 = field_quotient(2, 3);
  auto id = make_witness(q2.structure, q2.structure, [&] {
    std::vector<Element> f(q2.structure.size());
    for (Element x = 0; x < f.size(); ++x) f[x] = x;
    return f;
  }());
  CHECK_THROWS_AS(lift_hom(id, q2, q2), PreconditionError);
}
