// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperforge/adele_sandbox.hpp"

#include <algorithm>

#include "hyperforge/errors.hpp"
#include "hyperforge/parallel.hpp"

namespace hyperforge {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Stabilizer order of a generator over w: all of F_{q^m_w}^x when other
// places pin down the diagonal scalar, F_{q^m_w}^x / F_q^x for a single place.
std::size_t expected_isotropy(const SemiLocalClassSpace& s, std::size_t w) {
  const std::size_t units = ipow(s.places.q, s.places.degrees[w]) - 1;
  return s.places.degrees.size() == 1 ? units / (s.places.q - 1) : units;
}

HyperIdeal ideal_of_mask(const SemiLocalClassSpace& s, std::size_t mask) {
  Subset members(s.h().size());
  for (Element c = 0; c < s.h().size(); ++c)
    if ((s.zero_places(c) & mask) == mask) members.insert(c);
  return HyperIdeal{members};
}

std::string components_text(const SemiLocalClassSpace& s, Element cls) {
  const auto comps = s.ring().components(s.quotient.representative[cls]);
  std::string out = "(";
  for (std::size_t i = 0; i < comps.size(); ++i) out += (i ? "," : "") + std::to_string(comps[i]);
  return out + ")";
}

}  // namespace

std::vector<std::size_t> PlaceSystem::residue_sizes() const {
  std::vector<std::size_t> out;
  for (std::size_t m : degrees) out.push_back(ipow(q, m));
  return out;
}

PlaceSystem PlaceSystem::from_residues(std::size_t q, const std::vector<std::size_t>& sizes) {
  PlaceSystem ps{q, {}};
  for (std::size_t size : sizes) {
    std::size_t m = 0, v = 1;
    while (q > 1 && v < size) v *= q, ++m;
    if (q < 2 || v != size || m == 0)
      throw PreconditionError("residue size " + std::to_string(size) + " is not a positive power of " +
                              std::to_string(q));
    ps.degrees.push_back(m);
  }
  return ps;
}

std::size_t SemiLocalClassSpace::zero_places(Element cls) const {
  const auto comps = ring().components(quotient.representative[cls]);
  std::size_t mask = 0;
  for (std::size_t v = 0; v < comps.size(); ++v)
    if (comps[v] == ring().factors()[v].zero) mask |= std::size_t{1} << v;
  return mask;
}

SemiLocalClassSpace build_semilocal(const PlaceSystem& ps, const Bounds& bounds) {
  if (ps.q <= 2) throw PreconditionError("base field must have more than 2 elements so its units are nontrivial");
  if (prime_power(ps.q).first == 0) throw PreconditionError(std::to_string(ps.q) + " is not a prime power");
  if (ps.degrees.empty()) throw PreconditionError("at least one place is needed");
  std::size_t total = 1;
  for (std::size_t m : ps.degrees) {
    if (m == 0) throw PreconditionError("every residue field must contain the base field");
    const std::size_t size = ipow(ps.q, m);
    if (size > bounds.sandbox_ring_size || total > bounds.sandbox_ring_size / size)
      throw BoundError("product ring exceeds the sandbox bound " + std::to_string(bounds.sandbox_ring_size));
    total *= size;
  }
  Bounds wide = bounds;
  wide.ring_size = std::max(bounds.ring_size, bounds.sandbox_ring_size);
  const FiniteRing ring = product_of_fields(ps.residue_sizes(), wide);
  const UnitSubgroup diagonal = embedded_base_units(ring, ps.q);
  if (!subfield_criterion(ring, diagonal)) throw InvariantViolation("diagonal units plus 0 are not a subfield");
  SemiLocalClassSpace s{ps, quotient_by_subgroup(ring, diagonal, bounds)};
  const auto& h = s.h();
  if (!(h.sum(h.one(), h.one()) == Subset(h.size(), {h.zero(), h.one()})))
    throw InvariantViolation("quotient does not contain K");
  return s;
}

std::vector<PlaceIdeal> classify_ideals(const SemiLocalClassSpace& s, unsigned jobs) {
  const std::size_t k = s.places.degrees.size();
  std::vector<PlaceIdeal> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) out.push_back({mask, ideal_of_mask(s, mask)});
  auto expected = enumerate_ideals(s.h(), default_bounds(), jobs);
  std::vector<HyperIdeal> ours;
  for (const auto& p : out) {
    if (!is_ideal(s.h(), p.ideal.members)) throw InvariantViolation("J_Z is not an ideal for Z = " + std::to_string(p.places));
    ours.push_back(p.ideal);
  }
  std::sort(ours.begin(), ours.end());
  if (ours != expected)
    throw InvariantViolation("ideals of H are not the " + std::to_string(out.size()) + " place ideals: found " +
                             std::to_string(expected.size()));
  return out;
}

std::vector<SpecEntry> prime_spectrum(const SemiLocalClassSpace& s, unsigned jobs) {
  std::vector<SpecEntry> out;
  std::vector<HyperIdeal> ours;
  for (std::size_t w = 0; w < s.places.degrees.size(); ++w) {
    out.push_back({w, ideal_of_mask(s, std::size_t{1} << w)});
    ours.push_back(out.back().prime);
  }
  std::sort(ours.begin(), ours.end());
  if (ours != enumerate_prime_ideals(s.h(), default_bounds(), jobs))
    throw InvariantViolation("prime ideals are not the place ideals p_w");
  return out;
}

PrimeGroupoid prime_elements(const SemiLocalClassSpace& s, unsigned jobs) {
  const auto& h = s.h();
  const std::size_t n = h.size();
  PrimeGroupoid g;
  for (Element c = 0; c < n; ++c)
    for (Element d = 0; d < n; ++d)
      if (h.mul(c, d) == h.one()) {
        g.units.push_back(c);
        break;
      }
  // Orbits of H^x on H.
  std::vector<Element> orbit_of(n, static_cast<Element>(n));
  std::vector<Element> reps;
  for (Element c = 0; c < n; ++c) {
    if (orbit_of[c] != n) continue;
    reps.push_back(c);
    for (Element u : g.units) orbit_of[h.mul(u, c)] = c;
  }
  const auto spec = prime_spectrum(s, jobs);
  auto place_of_rep = parallel_map<std::optional<std::size_t>>(reps.size(), jobs, [&](std::size_t i) {
    const auto principal = ideal_closure(h, h.singleton(reps[i]));
    if (!is_prime_ideal(h, principal)) return std::optional<std::size_t>{};
    for (const auto& e : spec)
      if (e.prime == principal) return std::optional<std::size_t>{e.place};
    throw InvariantViolation("principal prime generated by " + std::to_string(reps[i]) + " is no place ideal");
  });
  g.fibers.resize(spec.size());
  std::vector<std::size_t> orbits_per_place(spec.size(), 0);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!place_of_rep[i]) continue;
    const std::size_t w = *place_of_rep[i];
    ++orbits_per_place[w];
    for (Element c = 0; c < n; ++c)
      if (orbit_of[c] == reps[i]) g.fibers[w].generators.push_back(c);
  }
  for (std::size_t w = 0; w < spec.size(); ++w) {
    Fiber& f = g.fibers[w];
    f.place = w;
    if (orbits_per_place[w] != 1)
      throw InvariantViolation("units act on the generators of p_" + std::to_string(w) + " with " +
                               std::to_string(orbits_per_place[w]) + " orbits");
    std::vector<Element> idempotents;
    for (Element a : f.generators)
      if (h.mul(a, a) == a) idempotents.push_back(a);
    if (idempotents.size() != 1)
      throw InvariantViolation("fiber over place " + std::to_string(w) + " has " + std::to_string(idempotents.size()) +
                               " idempotents");
    f.idempotent = idempotents[0];
    const Element a = f.generators.front();
    for (Element u : g.units) f.isotropy_order += h.mul(u, a) == a;
  }
  return g;
}

std::optional<Element> partial_product(const SemiLocalClassSpace& s, const PrimeGroupoid& p, Element a, Element b) {
  for (const auto& f : p.fibers)
    if (std::binary_search(f.generators.begin(), f.generators.end(), a))
      return std::binary_search(f.generators.begin(), f.generators.end(), b) ? std::optional{s.h().mul(a, b)}
                                                                              : std::nullopt;
  return std::nullopt;
}

std::string GroupoidReport::to_text() const {
  if (failures.empty()) return "groupoid laws hold\n";
  std::string out;
  for (const auto& f : failures) out += "FAIL " + f + "\n";
  return out;
}

GroupoidReport check_groupoid_laws(const SemiLocalClassSpace& s, const PrimeGroupoid& p, unsigned jobs) {
  const auto& h = s.h();
  const std::size_t n = h.size();
  std::vector<int> fiber_of(n, -1);
  for (const auto& f : p.fibers)
    for (Element a : f.generators) fiber_of[a] = static_cast<int>(f.place);

  auto per_fiber = parallel_map<std::vector<std::string>>(p.fibers.size(), jobs, [&](std::size_t i) {
    std::vector<std::string> fails;
    const Fiber& f = p.fibers[i];
    const int w = static_cast<int>(f.place);
    const std::string tag = "place " + std::to_string(w) + ": ";
    const std::size_t ru = expected_isotropy(s, f.place);
    if (f.isotropy_order != ru)
      fails.push_back(tag + "isotropy order " + std::to_string(f.isotropy_order) + " != " + std::to_string(ru));
    if (f.generators.size() * ru != p.units.size())
      fails.push_back(tag + "fiber size " + std::to_string(f.generators.size()) + " != |H^x| / " + std::to_string(ru));
    for (Element a : f.generators) {
      if (h.mul(f.idempotent, a) != a) {
        fails.push_back(tag + "idempotent is not an identity for " + std::to_string(a));
        break;
      }
    }
    bool closed = true, assoc = true;
    for (Element a : f.generators) {
      bool has_inverse = false;
      for (Element b : f.generators) {
        const Element ab = h.mul(a, b);
        closed = closed && fiber_of[ab] == w;
        has_inverse = has_inverse || ab == f.idempotent;
      }
      if (!has_inverse) fails.push_back(tag + "no inverse for " + std::to_string(a));
    }
    if (!closed) fails.push_back(tag + "fiber not closed under products");
    for (Element a : f.generators)
      for (Element b : f.generators) {
        const Element ab = h.mul(a, b);
        for (Element c : f.generators) assoc = assoc && h.mul(ab, c) == h.mul(a, h.mul(b, c));
      }
    if (!assoc) fails.push_back(tag + "product not associative");
    // u -> u p_w: a homomorphism onto the fiber, each point hit isotropy-many times.
    std::vector<std::size_t> hits(n, 0);
    for (Element u : p.units) ++hits[h.mul(u, f.idempotent)];
    for (Element a : f.generators)
      if (hits[a] != ru) {
        fails.push_back(tag + "units do not act simply transitively modulo isotropy at " + std::to_string(a));
        break;
      }
    auto multiplicative = [&] {
      for (Element u : p.units)
        for (Element v : p.units)
          if (h.mul(h.mul(u, v), f.idempotent) != h.mul(h.mul(u, f.idempotent), h.mul(v, f.idempotent))) return false;
      return true;
    };
    if (!multiplicative()) fails.push_back(tag + "u -> u p_w is not multiplicative");
    for (const auto& other : p.fibers) {
      if (other.place == f.place) continue;
      for (Element a : f.generators)
        for (Element b : other.generators)
          if (fiber_of[h.mul(a, b)] != -1) {
            fails.push_back(tag + "cross-fiber product " + std::to_string(a) + "*" + std::to_string(b) + " is prime");
            return fails;
          }
    }
    return fails;
  });
  GroupoidReport report;
  for (auto& v : per_fiber)
    for (auto& f : v) report.failures.push_back(std::move(f));
  return report;
}

GroupoidReport check_place_removal(const SemiLocalClassSpace& s, const PrimeGroupoid& p, std::size_t place,
                                   const Bounds& bounds) {
  const std::size_t k = s.places.degrees.size();
  if (k < 2 || place >= k) throw PreconditionError("removing a place needs at least two places and a valid index");
  PlaceSystem smaller{s.places.q, s.places.degrees};
  smaller.degrees.erase(smaller.degrees.begin() + static_cast<std::ptrdiff_t>(place));
  const auto t = build_semilocal(smaller, bounds);
  const auto pt = prime_elements(t);
  GroupoidReport report;

  const std::size_t n = s.h().size();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> proj(n, kUnset);
  for (Element x = 0; x < s.ring().size(); ++x) {
    auto comps = s.ring().components(x);
    comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(place));
    const Element image = t.quotient.class_of[t.ring().encode(comps)];
    Element& slot = proj[s.quotient.class_of[x]];
    if (slot == kUnset) slot = image;
    if (slot != image) {
      report.failures.push_back("projection is not constant on the class of " + std::to_string(x));
      return report;
    }
  }
  for (const auto& f : p.fibers) {
    if (f.place == place) continue;
    const std::size_t w2 = f.place - (f.place > place ? 1 : 0);
    const auto& target = pt.fibers[w2];
    std::vector<Element> image;
    for (Element a : f.generators) image.push_back(proj[a]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    const std::string tag = "place " + std::to_string(f.place) + ": ";
    if (image != target.generators) report.failures.push_back(tag + "fiber does not map onto the smaller fiber");
    if (proj[f.idempotent] != target.idempotent) report.failures.push_back(tag + "idempotent not preserved");
    bool mult = true;
    for (Element a : f.generators)
      for (Element b : f.generators) mult = mult && proj[s.h().mul(a, b)] == t.h().mul(proj[a], proj[b]);
    if (!mult) report.failures.push_back(tag + "projection is not multiplicative on the fiber");
  }
  return report;
}

std::string sandbox_report(const SemiLocalClassSpace& s, const PrimeGroupoid& p) {
  std::string out = "q=" + std::to_string(s.places.q) + " residues=(";
  const auto sizes = s.places.residue_sizes();
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
  out += ") |H|=" + std::to_string(s.h().size()) + " |H^x|=" + std::to_string(p.units.size()) + "\n";
  for (const auto& f : p.fibers) {
    out += "place " + std::to_string(f.place) + ": residue " + std::to_string(sizes[f.place]) + "\n";
    out += "  fiber size " + std::to_string(f.generators.size()) + "\n";
    out += "  isotropy order " + std::to_string(f.isotropy_order) + "\n";
    out += "  idempotent " + components_text(s, f.idempotent) + " class " + std::to_string(f.idempotent) + "\n";
  }
  return out;
}

}  // namespace hyperforge
