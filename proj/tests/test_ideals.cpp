// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <set>

#include "doctest.h"
#include "hyperforge/errors.hpp"
#include "hyperforge/homomorphisms.hpp"
#include "hyperforge/ideals.hpp"
#include "tables.hpp"

using namespace hyperforge;

namespace {

bool naive_ideal(const HyperStructure& r, const std::set<Element>& s) {
  if (!s.count(r.zero())) return false;
  for (Element a : s) {
    for (Element x = 0; x < r.size(); ++x)
      if (!s.count(r.mul(x, a))) return false;
    for (Element b : s) {
      // a - b: every c with a in c + b.
      for (Element c = 0; c < r.size(); ++c)
        if (r.sum(c, b).contains(a) && !s.count(c)) return false;
    }
  }
  return true;
}

std::vector<std::set<Element>> scan_ideals(const HyperStructure& r) {
  std::vector<std::set<Element>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << r.size()); ++mask) {
    std::set<Element> s;
    for (Element i = 0; i < r.size(); ++i)
      if (mask >> i & 1) s.insert(i);
    if (naive_ideal(r, s)) out.push_back(s);
  }
  return out;
}

std::set<std::set<Element>> as_sets(const std::vector<HyperIdeal>& v) {
  std::set<std::set<Element>> out;
  for (const auto& i : v) {
    auto e = i.members.elements();
    out.insert(std::set<Element>(e.begin(), e.end()));
  }
  return out;
}

std::vector<HyperStructure> corpus() {
  std::vector<HyperStructure> out;
  out.push_back(builtin(Builtin::K));
  out.push_back(builtin(Builtin::S));
  out.push_back(certify(testdata::ex5(), Level::hyperfield));
  out.push_back(lyndon_extension(AbelianGroupSpec{{3}}, LyndonVariant::nilpotent));
  out.push_back(lyndon_extension(AbelianGroupSpec{{2}}, LyndonVariant::idempotent_pair));
  out.push_back(lyndon_extension(AbelianGroupSpec{{2, 2}}, LyndonVariant::plain));
  for (const auto& ring : small_ring_corpus(12)) {
    for (const auto& g : unit_subgroups(ring)) {
      auto q = quotient_by_subgroup(ring, g);
      if (q.structure.size() <= 12) out.push_back(std::move(q.structure));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("closure-generated ideals match the exhaustive subset scan") {
  const auto all = corpus();
  REQUIRE(all.size() > 60);
  std::size_t multi = 0;
  for (const auto& r : all) {
    const auto got = enumerate_ideals(r);
    CHECK(std::is_sorted(got.begin(), got.end()));
    const auto expected = scan_ideals(r);
    CHECK(as_sets(got) == std::set<std::set<Element>>(expected.begin(), expected.end()));
    CHECK(got.size() == expected.size());
    for (const auto& i : got) CHECK(is_ideal(r, i.members));
    multi += got.size() > 2;
  }
  CHECK(multi > 10);
}

TEST_CASE("ideal examples") {
  const auto k = builtin(Builtin::K);
  auto ik = enumerate_ideals(k);
  REQUIRE(ik.size() == 2);
  CHECK(ik[0].members == Subset(2, {0}));
  CHECK(ik[1].members == Subset::full(2));

  auto ex5 = certify(testdata::ex5(), Level::hyperfield);
  CHECK(enumerate_ideals(ex5).size() == 2);

  auto z6 = ring_as_hyperring(zmod(6));
  auto i6 = enumerate_ideals(z6.structure);
  REQUIRE(i6.size() == 4);
  auto ring_set = [&](const HyperIdeal& i) {
    std::set<Element> s;
    i.members.for_each([&](Element c) { s.insert(z6.representative[c]); });
    return s;
  };
  CHECK(ring_set(i6[0]) == std::set<Element>{0});
  CHECK(ring_set(i6[1]) == std::set<Element>{0, 3});
  CHECK(ring_set(i6[2]) == std::set<Element>{0, 2, 4});
  auto p6 = enumerate_prime_ideals(z6.structure);
  REQUIRE(p6.size() == 2);
  CHECK(ring_set(p6[0]) == std::set<Element>{0, 3});
  CHECK(ring_set(p6[1]) == std::set<Element>{0, 2, 4});

  auto pk = enumerate_prime_ideals(k);
  REQUIRE(pk.size() == 1);
  CHECK(pk[0].members == Subset(2, {0}));

  // F3 x F3 modulo the diagonal {(1,1), (2,2)}.
  auto f33 = product_of_fields({3, 3});
  const Element minus = f33.neg(f33.one());
  auto q = quotient_by_subgroup(f33, UnitSubgroup(f33, {f33.one(), minus}));
  CHECK(enumerate_prime_ideals(q.structure).size() == 2);
}

TEST_CASE("spec is in bijection with homs to K") {
  std::size_t total = 0;
  for (const auto& r : corpus()) {
    const auto points = spec_hom_bijection(r);
    const auto primes = enumerate_prime_ideals(r);
    CHECK(points.size() == primes.size());
    total += points.size();
  }
  CHECK(total > 60);
  CHECK(spec_hom_bijection(ring_as_hyperring(zmod(6)).structure).size() == 2);
  CHECK(spec_hom_bijection(certify(testdata::ex5(), Level::hyperfield)).size() == 1);
}

TEST_CASE("no homs from finite rings to S") {
  for (std::size_t n = 2; n <= 12; ++n) CHECK(homs_to_sign(zmod(n)).empty());
  for (std::size_t q : {4, 8, 9}) CHECK(homs_to_sign(finite_field(q), default_bounds(), 2).empty());
  CHECK_FALSE(is_symmetric_cone(zmod(2), Subset(2, {1})));
  CHECK_THROWS_AS(homs_to_sign(zmod(19)), BoundError);
}

TEST_CASE("infinity radical") {
  auto z8 = zmod(8);
  CHECK(infinity_radical(z8, Subset(8, {0})) == Subset(8, {0, 2, 4, 6}));
  auto z6 = zmod(6);
  CHECK(infinity_radical(z6, Subset(6, {0})) == Subset(6, {0}));
  CHECK(infinity_radical(z6, Subset::full(6)) == Subset::full(6));
  CHECK_THROWS_AS(infinity_radical(z6, Subset(6, {0, 1})), PreconditionError);

  // Contains J and is idempotent, on every ideal of Z/n.
  for (std::size_t n = 2; n <= 24; ++n) {
    auto r = zmod(n);
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      Subset j(n);
      for (Element x = 0; x < n; x += static_cast<Element>(d)) j.insert(x);
      const Subset rad = infinity_radical(r, j);
      CHECK(j.is_subset_of(rad));
      CHECK(infinity_radical(r, rad) == rad);
    }
  }

  auto h = ring_as_hyperring(z8);
  Subset zero(h.structure.size(), {0});
  CHECK(infinity_radical(h.structure, zero).count() == 4);
}

TEST_CASE("exact signs") {
  const auto t2m2 = make_polynomial({-2, 0, 1});
  CHECK(sign_at(t2m2, ExactRational(1)) == kSignMinusOne);
  CHECK(sign_at(t2m2, ExactRational(3, 2)) == 1);
  CHECK(sign_at(make_polynomial({0, 0}), ExactRational(5, 7)) == 0);
  CHECK(sign_at(IntPolynomial{}, ExactRational(5, 7)) == 0);

  const auto t = make_polynomial({0, 1});
  CHECK(sign_at_pm(t, ExactRational(0), Side::plus) == 1);
  CHECK(sign_at_pm(t, ExactRational(0), Side::minus) == kSignMinusOne);
  const auto sq = make_polynomial({1, -2, 1});
  CHECK(sign_at_pm(sq, ExactRational(1), Side::plus) == 1);
  CHECK(sign_at_pm(sq, ExactRational(1), Side::minus) == 1);
  CHECK(sign_at_pm(t2m2, ExactRational(1), Side::plus) == kSignMinusOne);
  CHECK_THROWS_AS(sign_at_pm(IntPolynomial{0}, ExactRational(1), Side::plus), PreconditionError);

  // Root at 2/3 of multiplicity 3 times (T + 1).
  auto p = multiply(multiply(make_polynomial({-2, 3}), make_polynomial({-2, 3})),
                    multiply(make_polynomial({-2, 3}), make_polynomial({1, 1})));
  CHECK(sign_at(p, ExactRational(2, 3)) == 0);
  CHECK(sign_at_pm(p, ExactRational(2, 3), Side::plus) == 1);
  CHECK(sign_at_pm(p, ExactRational(2, 3), Side::minus) == kSignMinusOne);
  CHECK(sign_at_pm(p, ExactRational(-1), Side::plus) == kSignMinusOne);
  CHECK(sign_at_pm(p, ExactRational(-1), Side::minus) == 1);

  CHECK(sign_at_infinity(t2m2, Side::minus) == 1);
  CHECK(sign_at_infinity(p, Side::plus) == 1);
  CHECK(sign_at_infinity(p, Side::minus) == 1);
  CHECK(sign_at_infinity(make_polynomial({0, -1, 0}), Side::minus) == 1);

  CHECK(ExactRational(4, -6) == ExactRational(-2, 3));
  CHECK(ExactRational::parse("-10/4").to_string() == "-5/2");
  CHECK_THROWS_AS(ExactRational(1, 0), PreconditionError);
  CHECK_THROWS_AS(ExactRational::parse("x/2"), PreconditionError);
}

TEST_CASE("sign evaluation properties") {
  // Compare against floating evaluation away from roots, and check
  // multiplicativity and the one-sided limits.
  std::vector<IntPolynomial> polys = {make_polynomial({-2, 0, 1}), make_polynomial({1, 1}),
                                      make_polynomial({6, -5, 1}), make_polynomial({0, 0, 0, 2}),
                                      make_polynomial({-1, 3, -3, 1}), make_polynomial({4, 0, -1, 0, 1})};
  std::vector<ExactRational> points;
  for (int a = -7; a <= 7; ++a)
    for (int b = 1; b <= 4; ++b) points.emplace_back(a, b);
  for (const auto& p : polys)
    for (const auto& q : polys)
      for (const auto& l : points) {
        CHECK(sign_at(multiply(p, q), l) == sign_mul(sign_at(p, l), sign_at(q, l)));
        if (sign_at(p, l) != 0) {
          CHECK(sign_at_pm(p, l, Side::plus) == sign_at(p, l));
          CHECK(sign_at_pm(p, l, Side::minus) == sign_at(p, l));
        }
      }
  for (const auto& p : polys)
    for (const auto& l : points) {
      double x = l.numerator().convert_to<double>() / l.denominator().convert_to<double>(), v = 0;
      for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i].convert_to<double>();
      if (std::abs(v) > 1e-9) CHECK(sign_at(p, l) == (v > 0 ? 1 : kSignMinusOne));
      // One-sided signs match exact evaluation a small step away.
      const BigInt n = 1000000;
      const ExactRational right(l.numerator() * n + 1, l.denominator() * n);
      const ExactRational left(l.numerator() * n - 1, l.denominator() * n);
      CHECK(sign_at_pm(p, l, Side::plus) == sign_at(p, right));
      CHECK(sign_at_pm(p, l, Side::minus) == sign_at(p, left));
    }
}
