// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <set>

#include "doctest.h"
#include "hyperforge/group.hpp"
#include "hyperforge/ring.hpp"

using namespace hyperforge;

TEST_CASE("field moduli are the smallest monic irreducibles") {
  CHECK(field_modulus(4) == std::vector<std::size_t>{1, 1, 1});     // T^2+T+1
  CHECK(field_modulus(9) == std::vector<std::size_t>{1, 0, 1});     // T^2+1
  CHECK(field_modulus(8) == std::vector<std::size_t>{1, 1, 0, 1});  // T^3+T+1
  CHECK(field_modulus(16) == std::vector<std::size_t>{1, 1, 0, 0, 1});
  CHECK(field_modulus(27) == std::vector<std::size_t>{1, 2, 0, 1});  // T^3+2T+1
  CHECK_THROWS_AS(finite_field(12), PreconditionError);
}

TEST_CASE("finite fields satisfy the ring axioms and have only units") {
  for (std::size_t q : {2, 3, 4, 5, 8, 9, 16, 25, 27}) {
    auto f = finite_field(q);
    CHECK(f.size() == q);
    CHECK(f.is_field());
    // from_tables re-checks every axiom exhaustively.
    CHECK_NOTHROW(FiniteRing::from_tables(f.add_rows(), f.mul_rows(), f.zero(), f.one()));
    // characteristic p
    auto [p, k] = prime_power(q);
    Element s = f.zero();
    for (std::size_t i = 0; i < p; ++i) s = f.add(s, f.one());
    CHECK(s == f.zero());
  }
  // F9: i = T has i^2 = -1, index of c0 + 3 c1.
  auto f9 = finite_field(9);
  CHECK(f9.mul(3, 3) == 2);
}

TEST_CASE("user ring tables are checked") {
  // Z/3 with a broken distributivity entry.
  auto z3 = zmod(3);
  auto mul = z3.mul_rows();
  mul[2][2] = 2;
  CHECK_THROWS_AS(FiniteRing::from_tables(z3.add_rows(), mul, 0, 1), PreconditionError);
}

TEST_CASE("products are componentwise") {
  auto r = product_of_fields({3, 3});
  CHECK(r.size() == 9);
  // idempotents (1,0) and (0,1)
  Element e = r.encode({1, 0}), f = r.encode({0, 1});
  CHECK(r.mul(e, e) == e);
  CHECK(r.mul(f, f) == f);
  CHECK(r.mul(e, f) == r.zero());
  CHECK(r.add(e, f) == r.one());
  CHECK(product_of_fields({2}).size() == 2);
  CHECK(product_of_fields({4, 4, 4}).size() == 64);
  auto big = product_of_fields({4, 16, 64});
  CHECK(big.size() == 4096);
  CHECK(big.units().size() == 3 * 15 * 63);
}

TEST_CASE("unit subgroups") {
  auto z7 = zmod(7);
  auto subs = unit_subgroups(z7);
  // Z/7^x is cyclic of order 6: subgroups of orders 1, 2, 3, 6.
  std::vector<std::size_t> orders;
  for (auto& s : subs) orders.push_back(s.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 3, 6});
  CHECK_THROWS_AS(UnitSubgroup(z7, {1, 2}), PreconditionError);
  CHECK_THROWS_AS(UnitSubgroup(zmod(6), {1, 2}), PreconditionError);
  // Z/8^x = Z/2 x Z/2 has five subgroups.
  CHECK(unit_subgroups(zmod(8)).size() == 5);
}

TEST_CASE("embedded base units") {
  auto f27 = finite_field(27);
  auto g = embedded_base_units(f27, 3);
  CHECK(g.members() == std::vector<Element>{1, 2});
  auto f16 = finite_field(16);
  auto g4 = embedded_base_units(f16, 4);
  CHECK(g4.order() == 3);
  for (Element x : g4.members()) CHECK(f16.pow(x, 3) == f16.one());
  auto prod = product_of_fields({4, 16});
  auto d = embedded_base_units(prod, 4);
  CHECK(d.order() == 3);
  for (Element x : d.members()) {
    auto c = prod.components(x);
    CHECK(c[0] != 0);
    CHECK(c[1] != 0);
  }
  CHECK_THROWS_AS(embedded_base_units(finite_field(8), 4), PreconditionError);
}

TEST_CASE("ring corpus entries are commutative rings") {
  auto corpus = small_ring_corpus(16);
  CHECK(corpus.size() >= 40);
  std::set<std::string> names;
  for (auto& r : corpus) {
    CHECK(r.size() <= 16);
    names.insert(r.name());
    CHECK_NOTHROW(FiniteRing::from_tables(r.add_rows(), r.mul_rows(), r.zero(), r.one()));
  }
  CHECK(names.size() == corpus.size());
}

TEST_CASE("abelian groups") {
  auto g16 = abelian_groups_of_order(16);
  CHECK(g16.size() == 5);
  CHECK(abelian_groups_of_order(12).size() == 2);
  CHECK(abelian_groups_of_order(1).size() == 1);
  CHECK(invariant_factors({2, 3}).factors == std::vector<std::size_t>{6});
  CHECK(invariant_factors({2, 2}).factors == std::vector<std::size_t>{2, 2});
  CHECK(invariant_factors({4, 6}).factors == std::vector<std::size_t>{2, 12});
  CHECK(AbelianGroupSpec::parse("Z/2xZ/4").factors == std::vector<std::size_t>{2, 4});
  CHECK(AbelianGroupSpec::parse("4x2").to_string() == "Z/2xZ/4");
  CHECK_THROWS_AS((AbelianGroupSpec{{4, 2}}).check(), PreconditionError);
  for (std::size_t n = 1; n <= 16; ++n)
    for (auto& spec : abelian_groups_of_order(n)) {
      AbelianGroup g(spec);
      std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) t[a][b] = g.op(a, b);
      CHECK(identify_abelian_group(t, 0) == spec);
    }
}
