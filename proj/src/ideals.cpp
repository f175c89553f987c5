// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperforge/ideals.hpp"

#include <algorithm>
#include <set>

#include "hyperforge/errors.hpp"
#include "hyperforge/homomorphisms.hpp"
#include "hyperforge/parallel.hpp"

namespace hyperforge {

bool operator<(const HyperIdeal& a, const HyperIdeal& b) {
  const std::size_t ca = a.size(), cb = b.size();
  if (ca != cb) return ca < cb;
  return a.members.elements() < b.members.elements();
}

bool is_ideal(const HyperStructure& r, const Subset& s) {
  if (!s.contains(r.zero())) return false;
  const auto members = s.elements();
  for (Element a : members) {
    for (Element x = 0; x < r.size(); ++x)
      if (!s.contains(r.mul(x, a))) return false;
    for (Element b : members)
      if (!kernels::subset_of(r.sum_words(a, r.neg(b)), s.words())) return false;
  }
  return true;
}

bool is_prime_ideal(const HyperStructure& r, const HyperIdeal& i) {
  if (i.size() == r.size()) return false;
  for (Element a = 0; a < r.size(); ++a) {
    if (i.contains(a)) continue;
    for (Element b = 0; b < r.size(); ++b)
      if (!i.contains(b) && i.contains(r.mul(a, b))) return false;
  }
  return true;
}

namespace {

std::vector<bool> unit_mask(const HyperStructure& r) {
  std::vector<bool> unit(r.size(), false);
  for (Element x = 0; x < r.size(); ++x)
    for (Element y = 0; y < r.size() && !unit[x]; ++y) unit[x] = r.mul(x, y) == r.one();
  return unit;
}

HyperIdeal closure_with_units(const HyperStructure& r, const Subset& seed, const std::vector<bool>& unit) {
  const std::size_t n = r.size();
  Subset in(n);
  std::vector<Element> members, work;
  bool whole = false;
  auto add = [&](Element e) {
    if (in.contains(e)) return;
    in.insert(e);
    members.push_back(e);
    work.push_back(e);
    whole = whole || unit[e];
  };
  add(r.zero());
  seed.for_each(add);
  Subset acc(n);
  while (!work.empty() && !whole) {
    const Element x = work.back();
    work.pop_back();
    for (Element y = 0; y < n; ++y) add(r.mul(y, x));
    const Element nx = r.neg(x);
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      acc |= r.sum_words(members[i], nx);
      acc |= r.sum_words(x, r.neg(members[i]));
    }
    acc.for_each(add);
  }
  // An ideal holding a unit u holds r u^-1 u for every r.
  if (whole) return HyperIdeal{Subset::full(n)};
  return HyperIdeal{std::move(in)};
}

}  // namespace

HyperIdeal ideal_closure(const HyperStructure& r, const Subset& seed) {
  return closure_with_units(r, seed, unit_mask(r));
}

std::vector<HyperIdeal> enumerate_ideals(const HyperStructure& r, const Bounds& bounds, unsigned jobs) {
  if (!r.satisfies(Level::hyperring)) throw PreconditionError("ideal enumeration needs a validated hyperring");
  const std::size_t n = r.size();
  if (n > bounds.carrier_size)
    throw BoundError("carrier of size " + std::to_string(n) + " exceeds the bound " +
                     std::to_string(bounds.carrier_size));
  const auto unit = unit_mask(r);
  std::vector<Element> units;
  for (Element x = 0; x < n; ++x)
    if (unit[x]) units.push_back(x);

  // One principal ideal per unit orbit.
  std::vector<bool> seen(n, false);
  std::vector<Element> seeds;
  for (Element x = 0; x < n; ++x) {
    if (seen[x]) continue;
    seeds.push_back(x);
    for (Element u : units) seen[r.mul(u, x)] = true;
  }
  auto principal = parallel_map<HyperIdeal>(seeds.size(), jobs, [&](std::size_t i) {
    return closure_with_units(r, r.singleton(seeds[i]), unit);
  });

  std::set<Subset> found;
  std::vector<Subset> frontier;
  for (auto& p : principal)
    if (found.insert(p.members).second) frontier.push_back(p.members);
  std::vector<Subset> gens(frontier);
  // Join closure: every ideal is the join of the principal ideals it holds.
  while (!frontier.empty()) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (!gens[j].is_subset_of(frontier[i]) && !frontier[i].is_subset_of(gens[j])) pairs.emplace_back(i, j);
    auto joins = parallel_map<HyperIdeal>(pairs.size(), jobs, [&](std::size_t k) {
      return closure_with_units(r, frontier[pairs[k].first] | gens[pairs[k].second], unit);
    });
    std::vector<Subset> next;
    for (auto& j : joins)
      if (found.insert(j.members).second) next.push_back(j.members);
    frontier = std::move(next);
  }
  std::vector<HyperIdeal> out;
  for (const auto& s : found) out.push_back(HyperIdeal{s});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HyperIdeal> enumerate_prime_ideals(const HyperStructure& r, const Bounds& bounds, unsigned jobs) {
  std::vector<HyperIdeal> out;
  for (auto& i : enumerate_ideals(r, bounds, jobs))
    if (is_prime_ideal(r, i)) out.push_back(std::move(i));
  return out;
}

std::vector<SpecPoint> spec_hom_bijection(const HyperStructure& r, const Bounds& bounds, unsigned jobs) {
  static const HyperStructure k = builtin(Builtin::K);
  std::vector<SpecPoint> points;
  for (auto& p : enumerate_prime_ideals(r, bounds, jobs)) {
    std::vector<Element> phi(r.size());
    for (Element x = 0; x < r.size(); ++x) phi[x] = p.contains(x) ? 0 : 1;
    if (!is_hom(r, k, phi))
      throw InvariantViolation("the map vanishing on the prime " + p.members.to_string() + " is not a hom to K");
    points.push_back(SpecPoint{std::move(p), std::move(phi)});
  }
  const auto homs = enumerate_homs(r, k, std::size_t{1} << 22, jobs);
  if (!homs.complete) throw BoundError("hom search to K ran out of budget");
  std::set<std::vector<Element>> from_primes, from_search;
  for (const auto& pt : points) from_primes.insert(pt.hom);
  for (const auto& h : homs.homs) {
    Subset kernel(r.size());
    for (Element x = 0; x < r.size(); ++x)
      if (h.map[x] == 0) kernel.insert(x);
    if (!is_ideal(r, kernel) || !is_prime_ideal(r, HyperIdeal{kernel}))
      throw InvariantViolation("kernel " + kernel.to_string() + " of a hom to K is not a prime ideal");
    from_search.insert(h.map);
  }
  if (from_primes != from_search)
    throw InvariantViolation("primes give " + std::to_string(from_primes.size()) + " homs to K, search found " +
                             std::to_string(from_search.size()));
  return points;
}

QuotientStructure ring_as_hyperring(const FiniteRing& ring, const Bounds& bounds) {
  return quotient_by_subgroup(ring, UnitSubgroup(ring, {ring.one()}), bounds);
}

bool is_symmetric_cone(const FiniteRing& ring, const Subset& p) {
  const std::size_t n = ring.size();
  if (p.contains(ring.zero())) return false;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const bool pa = p.contains(a), pb = p.contains(b);
      const bool sum = p.contains(ring.add(a, b)), prod = p.contains(ring.mul(a, b));
      if (pa && pb && (!sum || !prod)) return false;
      if (!pa && !pb && sum) return false;
      if (pa && prod && !pb) return false;
    }
  Subset differences(n);
  p.for_each([&](Element a) { p.for_each([&](Element b) { differences.insert(ring.sub(a, b)); }); });
  return differences.count() == n;
}

std::vector<SignHom> homs_to_sign(const FiniteRing& ring, const Bounds& bounds, unsigned jobs) {
  const std::size_t n = ring.size();
  if (n - 1 > bounds.cone_subset_scan)
    throw BoundError("cone scan over " + std::to_string(n - 1) + " elements exceeds the bound " +
                     std::to_string(bounds.cone_subset_scan));
  std::vector<Element> nonzero;
  for (Element x = 0; x < n; ++x)
    if (x != ring.zero()) nonzero.push_back(x);
  const std::size_t total = std::size_t{1} << nonzero.size();
  // Split the scan into fixed chunks so results come back in mask order.
  const std::size_t chunk = 1024, chunks = (total + chunk - 1) / chunk;
  auto found = parallel_map<std::vector<Subset>>(chunks, jobs, [&](std::size_t c) {
    std::vector<Subset> cones;
    for (std::size_t mask = c * chunk; mask < std::min(total, (c + 1) * chunk); ++mask) {
      Subset p(n);
      for (std::size_t i = 0; i < nonzero.size(); ++i)
        if (mask >> i & 1) p.insert(nonzero[i]);
      if (is_symmetric_cone(ring, p)) cones.push_back(std::move(p));
    }
    return cones;
  });
  static const HyperStructure s = builtin(Builtin::S);
  std::vector<SignHom> out;
  for (auto& list : found)
    for (auto& p : list) {
      std::vector<Element> rho(n, 0);
      for (Element x = 0; x < n; ++x)
        rho[x] = p.contains(x) ? 1 : p.contains(ring.neg(x)) ? kSignMinusOne : 0;
      out.push_back(SignHom{std::move(rho), std::move(p)});
    }

  const auto as_hyper = ring_as_hyperring(ring, bounds);
  const auto search = enumerate_homs(as_hyper.structure, s, std::size_t{1} << 22, jobs);
  if (!search.complete) throw BoundError("hom search to S ran out of budget");
  std::set<std::vector<Element>> via_cones, via_search;
  for (const auto& h : out) {
    std::vector<Element> classes(n);
    for (Element x = 0; x < n; ++x) classes[as_hyper.class_of[x]] = h.map[x];
    if (!is_hom(as_hyper.structure, s, classes))
      throw InvariantViolation("cone " + h.cone.to_string() + " does not give a hom to S");
    via_cones.insert(h.map);
  }
  for (const auto& h : search.homs) {
    std::vector<Element> map(n);
    Subset cone(n);
    for (Element x = 0; x < n; ++x) {
      map[x] = h.map[as_hyper.class_of[x]];
      if (map[x] == 1) cone.insert(x);
    }
    if (!is_symmetric_cone(ring, cone))
      throw InvariantViolation("hom to S with positive part " + cone.to_string() + " is not a symmetric cone");
    via_search.insert(map);
  }
  if (via_cones != via_search)
    throw InvariantViolation("cone scan gives " + std::to_string(via_cones.size()) + " homs to S, search found " +
                             std::to_string(via_search.size()));
  return out;
}

namespace {

template <class Mul>
Subset radical_of(std::size_t n, const Subset& j, Mul&& mul) {
  Subset out(n);
  std::vector<std::size_t> seen_at(n);
  std::vector<Element> seq;
  for (Element x = 0; x < n; ++x) {
    std::fill(seen_at.begin(), seen_at.end(), 0);
    seq.clear();
    Element p = x;
    // Positions are 1-based so that 0 means unseen.
    while (seen_at[p] == 0) {
      seq.push_back(p);
      seen_at[p] = seq.size();
      p = mul(p, x);
    }
    bool inside = true;
    for (std::size_t i = seen_at[p] - 1; i < seq.size(); ++i) inside = inside && j.contains(seq[i]);
    if (inside) out.insert(x);
  }
  return out;
}

}  // namespace

Subset infinity_radical(const FiniteRing& ring, const Subset& j) {
  const std::size_t n = ring.size();
  if (j.universe() != n || !j.contains(ring.zero())) throw PreconditionError("J is not an ideal of the ring");
  for (Element a : j.elements()) {
    for (Element b : j.elements())
      if (!j.contains(ring.sub(a, b))) throw PreconditionError("J is not an ideal of the ring");
    for (Element x = 0; x < n; ++x)
      if (!j.contains(ring.mul(x, a))) throw PreconditionError("J is not an ideal of the ring");
  }
  Subset out = radical_of(n, j, [&](Element a, Element b) { return ring.mul(a, b); });
  for (Element a : out.elements()) {
    for (Element b : out.elements())
      if (!out.contains(ring.sub(a, b))) throw InvariantViolation("infinity radical is not an ideal");
    for (Element x = 0; x < n; ++x)
      if (!out.contains(ring.mul(x, a))) throw InvariantViolation("infinity radical is not an ideal");
  }
  return out;
}

Subset infinity_radical(const HyperStructure& r, const Subset& j) {
  if (j.universe() != r.size() || !is_ideal(r, j)) throw PreconditionError("J is not an ideal of the hyperring");
  Subset out = radical_of(r.size(), j, [&](Element a, Element b) { return r.mul(a, b); });
  if (!is_ideal(r, out)) throw InvariantViolation("infinity radical is not an ideal");
  return out;
}

IntPolynomial make_polynomial(std::initializer_list<long long> coefficients) {
  IntPolynomial p;
  for (long long c : coefficients) p.emplace_back(c);
  return p;
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntPolynomial out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

ExactRational::ExactRational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ == 0) throw PreconditionError("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string ExactRational::to_string() const {
  return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
}

ExactRational ExactRational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return ExactRational(BigInt(text));
    return ExactRational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw PreconditionError("not a rational number: '" + text + "'");
  }
}

namespace {

Element sign_of(const BigInt& v) { return v > 0 ? 1 : v < 0 ? kSignMinusOne : 0; }

std::size_t degree(const IntPolynomial& p) {
  std::size_t d = p.size();
  while (d > 0 && p[d - 1] == 0) --d;
  return d == 0 ? 0 : d - 1;
}

bool is_zero(const IntPolynomial& p) {
  return std::all_of(p.begin(), p.end(), [](const BigInt& c) { return c == 0; });
}

// Numerator of P(a/b) b^deg.
BigInt scaled_value(const IntPolynomial& p, const ExactRational& lambda) {
  const std::size_t d = degree(p);
  BigInt acc = 0;
  for (std::size_t i = d + 1; i-- > 0;) acc = acc * lambda.numerator() + (i < p.size() ? p[i] : BigInt(0)) *
                                                                           boost::multiprecision::pow(lambda.denominator(), static_cast<unsigned>(d - i));
  return acc;
}

}  // namespace

Element sign_mul(Element a, Element b) {
  if (a > 2 || b > 2) throw IndexError("not an element of S");
  if (a == 0 || b == 0) return 0;
  return a == b ? 1 : kSignMinusOne;
}

Element sign_at(const IntPolynomial& p, const ExactRational& lambda) {
  if (is_zero(p)) return 0;
  return sign_of(scaled_value(p, lambda));
}

Element sign_at_pm(const IntPolynomial& p, const ExactRational& lambda, Side side) {
  if (is_zero(p)) throw PreconditionError("one-sided sign of the zero polynomial");
  IntPolynomial q(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(degree(p) + 1));
  const BigInt& a = lambda.numerator();
  const BigInt& b = lambda.denominator();
  std::size_t k = 0;
  // Divide by (bT - a) while lambda is a root; Gauss's lemma keeps it integral.
  while (sign_at(q, lambda) == 0) {
    const std::size_t d = q.size() - 1;
    IntPolynomial next(d);
    next[d - 1] = q[d] / b;
    for (std::size_t i = d - 1; i > 0; --i) next[i - 1] = (q[i] + a * next[i]) / b;
    q = std::move(next);
    ++k;
  }
  const Element s = sign_at(q, lambda);
  return side == Side::minus && k % 2 == 1 ? sign_mul(s, kSignMinusOne) : s;
}

Element sign_at_infinity(const IntPolynomial& p, Side side) {
  if (is_zero(p)) return 0;
  const std::size_t d = degree(p);
  const Element lead = sign_of(p[d]);
  return side == Side::minus && d % 2 == 1 ? sign_mul(lead, kSignMinusOne) : lead;
}

}  // namespace hyperforge
