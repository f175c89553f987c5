// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <chrono>

#include "doctest.h"
#include "hyperforge/adele_sandbox.hpp"
#include "hyperforge/errors.hpp"

using namespace hyperforge;

namespace {

// Units of F_{q^m}^x modulo the diagonal F_q^x, counted directly.
std::size_t unit_classes(std::size_t q, const std::vector<std::size_t>& sizes) {
  std::size_t u = 1;
  for (std::size_t s : sizes) u *= s - 1;
  return u / (q - 1);
}

}  // namespace

TEST_CASE("building semi-local class spaces") {
  const auto s = build_semilocal(PlaceSystem::from_residues(4, {4, 16, 64}));
  CHECK(s.h().size() == (4096 - 1) / 3 + 1);
  CHECK(s.h().sum(1, 1) == Subset(s.h().size(), {0, 1}));

  const auto s33 = build_semilocal(PlaceSystem{3, {1, 1}});
  CHECK(s33.h().size() == 5);
  CHECK(s33.h().satisfies(Level::hyperring));

  CHECK_THROWS_AS(build_semilocal(PlaceSystem{2, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(build_semilocal(PlaceSystem{3, {0, 1}}), PreconditionError);
  CHECK_THROWS_AS(build_semilocal(PlaceSystem{6, {1}}), PreconditionError);
  CHECK_THROWS_AS(PlaceSystem::from_residues(4, {8}), PreconditionError);
  Bounds tight = default_bounds();
  tight.sandbox_ring_size = 1000;
  CHECK_THROWS_AS(build_semilocal(PlaceSystem{4, {1, 2, 3}}, tight), BoundError);
}

TEST_CASE("ideals and primes of the q = 4 model") {
  const auto start = std::chrono::steady_clock::now();
  const auto s = build_semilocal(PlaceSystem::from_residues(4, {4, 16, 64}));
  const auto ideals = classify_ideals(s);
  REQUIRE(ideals.size() == 8);
  CHECK(ideals[0].ideal.members == Subset::full(s.h().size()));
  CHECK(ideals[7].ideal.members == Subset(s.h().size(), {0}));
  // Lattice: J of a union is the intersection.
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      CHECK(ideals[a | b].ideal.members == (ideals[a].ideal.members & ideals[b].ideal.members));
      CHECK(ideal_closure(s.h(), ideals[a].ideal.members | ideals[b].ideal.members) == ideals[a & b].ideal);
    }
  const auto spec = prime_spectrum(s);
  REQUIRE(spec.size() == 3);
  for (std::size_t w = 0; w < 3; ++w) CHECK(spec[w].prime == ideals[std::size_t{1} << w].ideal);

  const auto g = prime_elements(s);
  CHECK(g.units.size() == unit_classes(4, {4, 16, 64}));
  CHECK(g.units.size() == 945);
  REQUIRE(g.fibers.size() == 3);
  CHECK(g.fibers[0].generators.size() == 315);
  CHECK(g.fibers[1].generators.size() == 63);
  CHECK(g.fibers[2].generators.size() == 15);
  CHECK(g.fibers[0].isotropy_order == 3);
  CHECK(g.fibers[1].isotropy_order == 15);
  CHECK(g.fibers[2].isotropy_order == 63);
  const auto laws = check_groupoid_laws(s, g, 2);
  INFO(laws.to_text());
  CHECK(laws.passed());
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::minutes(1));

  // The idempotent over w is the indicator of the other places.
  for (const auto& f : g.fibers) {
    std::vector<Element> comps;
    for (std::size_t v = 0; v < 3; ++v) comps.push_back(v == f.place ? s.ring().factors()[v].zero : s.ring().factors()[v].one);
    CHECK(s.quotient.class_of[s.ring().encode(comps)] == f.idempotent);
  }
  // Idempotents over two places multiply to a non-prime element.
  const Element e01 = s.h().mul(g.fibers[0].idempotent, g.fibers[1].idempotent);
  CHECK_FALSE(is_prime_ideal(s.h(), ideal_closure(s.h(), s.h().singleton(e01))));
  CHECK_FALSE(partial_product(s, g, g.fibers[0].idempotent, g.fibers[1].idempotent));
  CHECK(partial_product(s, g, g.fibers[2].idempotent, g.fibers[2].idempotent) == g.fibers[2].idempotent);

  for (std::size_t place = 0; place < 3; ++place) {
    const auto r = check_place_removal(s, g, place);
    INFO(r.to_text());
    CHECK(r.passed());
  }
}

TEST_CASE("small place systems") {
  for (const auto& ps : std::vector<PlaceSystem>{{3, {1, 1}}, {3, {1, 2}}, {4, {1, 1}}, {5, {1, 1, 1}}, {3, {2, 2}},
                                                 {4, {2}}, {3, {1}}, {7, {1, 1}}, {9, {1, 1}}}) {
    const auto s = build_semilocal(ps);
    const std::size_t k = ps.degrees.size();
    CHECK(classify_ideals(s).size() == (std::size_t{1} << k));
    CHECK(prime_spectrum(s).size() == k);
    const auto g = prime_elements(s);
    CHECK(g.units.size() == unit_classes(ps.q, ps.residue_sizes()));
    for (const auto& f : g.fibers) {
      const std::size_t iso = ps.residue_sizes()[f.place] - 1;
      CHECK(f.isotropy_order == (k == 1 ? iso / (ps.q - 1) : iso));
      CHECK(f.generators.size() * f.isotropy_order == g.units.size());
    }
    CHECK(check_groupoid_laws(s, g).passed());
    if (k >= 2) CHECK(check_place_removal(s, g, k - 1).passed());
  }
  // One place: the only prime is {0}, generated by 0.
  const auto one = build_semilocal(PlaceSystem{3, {2}});
  const auto g = prime_elements(one);
  REQUIRE(g.fibers.size() == 1);
  CHECK(g.fibers[0].generators == std::vector<Element>{0});
  CHECK(prime_spectrum(one)[0].prime.members == Subset(one.h().size(), {0}));
}

TEST_CASE("report is stable") {
  const auto s = build_semilocal(PlaceSystem{3, {1, 1}});
  const auto g = prime_elements(s);
  const auto text = sandbox_report(s, g);
  CHECK(text == sandbox_report(s, prime_elements(s, 4)));
  CHECK(text.find("place 1: residue 3") != std::string::npos);
}
