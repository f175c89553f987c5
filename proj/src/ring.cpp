// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperforge/ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hyperforge/errors.hpp"

namespace hyperforge {

namespace {

constexpr std::size_t kMaxFactor = 4096;

using Poly = std::vector<std::size_t>;  // constant term first

void check_table_size(std::size_t n, const Bounds& bounds) {
  if (n > bounds.ring_size)
    throw BoundError("ring of order " + std::to_string(n) + " exceeds the ring bound " +
                     std::to_string(bounds.ring_size));
  if (n > kMaxFactor)
    throw BoundError("table-backed ring factor of order " + std::to_string(n) +
                     " exceeds " + std::to_string(kMaxFactor));
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::size_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

// Remainder of a modulo a monic m.
Poly poly_mod(Poly a, const Poly& m, std::size_t p) {
  trim(a);
  const std::size_t d = m.size() - 1;
  while (a.size() > d) {
    const std::size_t c = a.back(), shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

Poly digits(std::size_t v, std::size_t p, std::size_t len) {
  Poly out(len);
  for (auto& c : out) c = v % p, v /= p;
  return out;
}

std::size_t undigits(const Poly& a, std::size_t p) {
  std::size_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

bool irreducible(const Poly& f, std::size_t p) {
  const std::size_t k = f.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t v = 0; v < count; ++v) {
      Poly g = digits(v, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FiniteRing::Factor table_factor(std::size_t n, std::string name,
                                const std::function<Element(Element, Element)>& add,
                                const std::function<Element(Element, Element)>& mul,
                                Element zero, Element one) {
  FiniteRing::Factor f;
  f.n = n;
  f.zero = zero;
  f.one = one;
  f.name = std::move(name);
  f.add.resize(n * n);
  f.mul.resize(n * n);
  f.neg.resize(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      f.add[a * n + b] = static_cast<std::uint16_t>(add(a, b));
      f.mul[a * n + b] = static_cast<std::uint16_t>(mul(a, b));
      if (f.add[a * n + b] == zero) f.neg[a] = static_cast<std::uint16_t>(b);
    }
  return f;
}

}  // namespace

FiniteRing FiniteRing::from_tables(const std::vector<std::vector<Element>>& add,
                                   const std::vector<std::vector<Element>>& mul, Element zero,
                                   Element one, std::string name) {
  const std::size_t n = add.size();
  if (n < 2 || n > kMaxFactor) throw PreconditionError("ring tables must have 2..4096 rows");
  if (mul.size() != n) throw PreconditionError("add and mul tables differ in size");
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n) throw PreconditionError("ring table not square");
    for (std::size_t j = 0; j < n; ++j)
      if (add[i][j] >= n || mul[i][j] >= n) throw IndexError("ring table entry out of range");
  }
  if (zero >= n || one >= n || zero == one) throw PreconditionError("bad zero/one indices");
  auto fail = [&](const std::string& law, std::vector<Element> w) {
    std::string s = "ring axiom fails: " + law + " at (";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    throw PreconditionError(s + ")");
  };
  for (Element a = 0; a < n; ++a) {
    if (add[zero][a] != a) fail("additive identity", {a});
    if (mul[one][a] != a) fail("multiplicative identity", {a});
    if (std::find(add[a].begin(), add[a].end(), zero) == add[a].end()) fail("additive inverse", {a});
    for (Element b = 0; b < n; ++b) {
      if (add[a][b] != add[b][a]) fail("additive commutativity", {a, b});
      if (mul[a][b] != mul[b][a]) fail("multiplicative commutativity", {a, b});
      for (Element c = 0; c < n; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]]) fail("additive associativity", {a, b, c});
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) fail("multiplicative associativity", {a, b, c});
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) fail("distributivity", {a, b, c});
      }
    }
  }
  return trusted(table_factor(
      n, std::move(name), [&](Element a, Element b) { return add[a][b]; },
      [&](Element a, Element b) { return mul[a][b]; }, zero, one));
}

FiniteRing FiniteRing::trusted(Factor factor) {
  if (factor.n < 2 || factor.n > kMaxFactor || factor.add.size() != factor.n * factor.n ||
      factor.mul.size() != factor.n * factor.n || factor.neg.size() != factor.n)
    throw PreconditionError("malformed ring factor");
  FiniteRing r;
  r.factors_.push_back(std::move(factor));
  r.finish();
  return r;
}

FiniteRing FiniteRing::product(const std::vector<FiniteRing>& rings) {
  if (rings.empty()) throw PreconditionError("product of no rings");
  FiniteRing r;
  for (const auto& ring : rings)
    for (const auto& f : ring.factors_) r.factors_.push_back(f);
  r.finish();
  // Keep the caller-visible names of the pieces, not of their factors.
  r.name_.clear();
  for (std::size_t i = 0; i < rings.size(); ++i) r.name_ += (i ? " x " : "") + rings[i].name();
  return r;
}

void FiniteRing::finish() {
  radix_.assign(factors_.size(), 1);
  size_ = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    radix_[i] = size_;
    size_ *= factors_[i].n;
  }
  std::vector<Element> z, o;
  for (const auto& f : factors_) z.push_back(f.zero), o.push_back(f.one);
  zero_ = encode(z);
  one_ = encode(o);
  name_.clear();
  for (std::size_t i = 0; i < factors_.size(); ++i) name_ += (i ? " x " : "") + factors_[i].name;
}

std::vector<Element> FiniteRing::components(Element a) const {
  std::vector<Element> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    c[i] = static_cast<Element>((a / radix_[i]) % factors_[i].n);
  return c;
}

Element FiniteRing::encode(const std::vector<Element>& c) const {
  std::size_t v = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) v += c[i] * radix_[i];
  return static_cast<Element>(v);
}

Element FiniteRing::add(Element a, Element b) const {
  if (factors_.size() == 1) return factors_[0].add[a * factors_[0].n + b];
  std::size_t v = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    const std::size_t x = (a / radix_[i]) % f.n, y = (b / radix_[i]) % f.n;
    v += f.add[x * f.n + y] * radix_[i];
  }
  return static_cast<Element>(v);
}

Element FiniteRing::mul(Element a, Element b) const {
  if (factors_.size() == 1) return factors_[0].mul[a * factors_[0].n + b];
  std::size_t v = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    const std::size_t x = (a / radix_[i]) % f.n, y = (b / radix_[i]) % f.n;
    v += f.mul[x * f.n + y] * radix_[i];
  }
  return static_cast<Element>(v);
}

Element FiniteRing::neg(Element a) const {
  std::size_t v = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    v += f.neg[(a / radix_[i]) % f.n] * radix_[i];
  }
  return static_cast<Element>(v);
}

Element FiniteRing::pow(Element a, std::size_t k) const {
  Element r = one_, b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

bool FiniteRing::is_unit(Element a) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    const std::size_t x = (a / radix_[i]) % f.n;
    bool found = false;
    for (std::size_t y = 0; y < f.n && !found; ++y) found = f.mul[x * f.n + y] == f.one;
    if (!found) return false;
  }
  return true;
}

std::vector<Element> FiniteRing::units() const {
  // Units of a product are tuples of factor units.
  std::vector<std::vector<Element>> per(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    for (Element x = 0; x < f.n; ++x)
      for (std::size_t y = 0; y < f.n; ++y)
        if (f.mul[x * f.n + y] == f.one) {
          per[i].push_back(x);
          break;
        }
  }
  std::vector<Element> out{0};
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::vector<Element> next;
    for (Element base : out)
      for (Element x : per[i]) next.push_back(static_cast<Element>(base + x * radix_[i]));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteRing::is_field() const {
  return factors_.size() == 1 && units().size() == size_ - 1;
}

std::vector<std::vector<Element>> FiniteRing::add_rows() const {
  std::vector<std::vector<Element>> t(size_, std::vector<Element>(size_));
  for (Element a = 0; a < size_; ++a)
    for (Element b = 0; b < size_; ++b) t[a][b] = add(a, b);
  return t;
}

std::vector<std::vector<Element>> FiniteRing::mul_rows() const {
  std::vector<std::vector<Element>> t(size_, std::vector<Element>(size_));
  for (Element a = 0; a < size_; ++a)
    for (Element b = 0; b < size_; ++b) t[a][b] = mul(a, b);
  return t;
}

FiniteRing zmod(std::size_t n, const Bounds& bounds) {
  if (n < 2) throw PreconditionError("Z/n needs n >= 2");
  check_table_size(n, bounds);
  return FiniteRing::trusted(table_factor(
      n, "Z/" + std::to_string(n),
      [n](Element a, Element b) { return static_cast<Element>((a + b) % n); },
      [n](Element a, Element b) {
        return static_cast<Element>((static_cast<std::size_t>(a) * b) % n);
      },
      0, 1));
}

std::pair<std::size_t, std::size_t> prime_power(std::size_t q) {
  if (q < 2) return {0, 0};
  std::size_t p = 2;
  while (q % p != 0) ++p;
  std::size_t k = 0, r = q;
  while (r % p == 0) r /= p, ++k;
  if (r != 1) return {0, 0};
  return {p, k};
}

std::vector<std::size_t> field_modulus(std::size_t q) {
  auto [p, k] = prime_power(q);
  if (p == 0) throw PreconditionError(std::to_string(q) + " is not a prime power");
  // Counting v upward makes c_{k-1} the most significant coefficient.
  for (std::size_t v = 0; v < q; ++v) {
    Poly f = digits(v, p, k);
    f.push_back(1);
    if (irreducible(f, p)) return f;
  }
  throw InvariantViolation("no irreducible polynomial of degree " + std::to_string(k));
}

FiniteRing finite_field(std::size_t q, const Bounds& bounds) {
  auto [p, k] = prime_power(q);
  if (p == 0) throw PreconditionError(std::to_string(q) + " is not a prime power");
  check_table_size(q, bounds);
  if (k == 1) {
    FiniteRing r = zmod(q, bounds);
    return r;
  }
  const Poly f = field_modulus(q);
  auto slow_mul = [&](std::size_t a, std::size_t b) {
    return undigits(poly_mod(poly_mul(digits(a, p, k), digits(b, p, k), p), f, p), p);
  };
  // Multiplication through discrete logs of a primitive element.
  std::vector<std::size_t> exp(q - 1), log(q, 0);
  for (std::size_t g = 2; g < q; ++g) {
    std::size_t x = 1, order = 0;
    do {
      exp[order++] = x;
      x = slow_mul(x, g);
    } while (x != 1 && order < q - 1);
    if (x == 1 && order == q - 1) break;
  }
  for (std::size_t i = 0; i < q - 1; ++i) log[exp[i]] = i;
  std::string name = "F" + std::to_string(q);
  return FiniteRing::trusted(table_factor(
      q, name,
      [&](Element a, Element b) {
        std::size_t v = 0, w = 1, x = a, y = b;
        for (std::size_t i = 0; i < k; ++i, w *= p, x /= p, y /= p) v += ((x + y) % p) * w;
        return static_cast<Element>(v);
      },
      [&](Element a, Element b) {
        if (a == 0 || b == 0) return Element{0};
        return static_cast<Element>(exp[(log[a] + log[b]) % (q - 1)]);
      },
      0, 1));
}

FiniteRing product_of_fields(const std::vector<std::size_t>& qs, const Bounds& bounds) {
  if (qs.empty()) throw PreconditionError("product of fields needs at least one field");
  std::size_t total = 1;
  for (auto q : qs) {
    total *= q;
    if (total > bounds.sandbox_ring_size)
      throw BoundError("product ring exceeds the bound " + std::to_string(bounds.sandbox_ring_size));
  }
  std::vector<FiniteRing> fields;
  for (auto q : qs) fields.push_back(finite_field(q, bounds));
  if (fields.size() == 1) return fields.front();
  return FiniteRing::product(fields);
}

FiniteRing poly_quotient(const FiniteRing& base, const std::vector<Element>& monic,
                         std::string name, const Bounds& bounds) {
  if (monic.size() < 2 || monic.back() != base.one())
    throw PreconditionError("modulus must be monic of degree >= 1");
  const std::size_t d = monic.size() - 1, b = base.size();
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) n *= b;
  check_table_size(n, bounds);
  using V = std::vector<Element>;
  auto split = [&](Element e) {
    V v(d);
    for (auto& c : v) c = e % b, e /= static_cast<Element>(b);
    return v;
  };
  auto join = [&](const V& v) {
    std::size_t e = 0;
    for (std::size_t i = d; i-- > 0;) e = e * b + v[i];
    return static_cast<Element>(e);
  };
  auto add = [&](Element x, Element y) {
    V u = split(x), v = split(y);
    for (std::size_t i = 0; i < d; ++i) u[i] = base.add(u[i], v[i]);
    return join(u);
  };
  auto mul = [&](Element x, Element y) {
    V u = split(x), v = split(y), r(2 * d - 1, base.zero());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) r[i + j] = base.add(r[i + j], base.mul(u[i], v[j]));
    for (std::size_t top = r.size(); top-- > d;) {
      const Element c = r[top];
      for (std::size_t i = 0; i <= d; ++i)
        r[top - d + i] = base.sub(r[top - d + i], base.mul(c, monic[i]));
    }
    r.resize(d);
    return join(r);
  };
  V zero(d, base.zero()), one(d, base.zero());
  one[0] = base.one();
  return FiniteRing::trusted(table_factor(n, std::move(name), add, mul, join(zero), join(one)));
}

UnitSubgroup::UnitSubgroup(const FiniteRing& ring, std::vector<Element> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Element g : members_) {
    if (g >= ring.size()) throw IndexError("subgroup member out of range");
    if (!ring.is_unit(g)) throw PreconditionError(std::to_string(g) + " is not a unit");
  }
  if (!contains(ring.one())) throw PreconditionError("subgroup must contain 1");
  for (Element a : members_)
    for (Element b : members_)
      if (!contains(ring.mul(a, b)))
        throw PreconditionError("subset is not closed under multiplication: " + std::to_string(a) +
                                "*" + std::to_string(b));
}

bool UnitSubgroup::contains(Element e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

UnitSubgroup UnitSubgroup::generated(const FiniteRing& ring, const std::vector<Element>& generators) {
  std::set<Element> seen{ring.one()};
  std::vector<Element> frontier{ring.one()};
  for (Element g : generators)
    if (!ring.is_unit(g)) throw PreconditionError(std::to_string(g) + " is not a unit");
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier)
      for (Element g : generators) {
        Element y = ring.mul(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  UnitSubgroup s;
  s.members_.assign(seen.begin(), seen.end());
  return s;
}

std::vector<UnitSubgroup> unit_subgroups(const FiniteRing& ring) {
  const auto units = ring.units();
  std::set<std::vector<Element>> seen;
  std::vector<UnitSubgroup> out;
  std::vector<UnitSubgroup> frontier{UnitSubgroup::generated(ring, {})};
  seen.insert(frontier.front().members());
  while (!frontier.empty()) {
    std::vector<UnitSubgroup> next;
    for (const auto& s : frontier) {
      out.push_back(s);
      for (Element u : units) {
        if (s.contains(u)) continue;
        std::vector<Element> gens = s.members();
        gens.push_back(u);
        auto t = UnitSubgroup::generated(ring, gens);
        if (seen.insert(t.members()).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const UnitSubgroup& a, const UnitSubgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

UnitSubgroup embedded_base_units(const FiniteRing& ring, std::size_t q) {
  auto [p, k] = prime_power(q);
  if (p == 0) throw PreconditionError(std::to_string(q) + " is not a prime power");
  const Poly f = field_modulus(q);
  // Per factor: image of T (a root of f), then the image of each base element.
  std::vector<std::vector<Element>> images;  // images[i][a] for a in F_q
  for (const auto& fac : ring.factors()) {
    auto fadd = [&](Element x, Element y) { return Element{fac.add[x * fac.n + y]}; };
    auto fmul = [&](Element x, Element y) { return Element{fac.mul[x * fac.n + y]}; };
    std::size_t units = 0;
    for (Element x = 0; x < fac.n; ++x)
      for (Element y = 0; y < fac.n; ++y)
        if (fmul(x, y) == fac.one) {
          ++units;
          break;
        }
    if (units != fac.n - 1) throw PreconditionError("factor " + fac.name + " is not a field");
    auto scalar = [&](std::size_t c) {
      Element r = fac.zero;
      for (std::size_t i = 0; i < c; ++i) r = fadd(r, fac.one);
      return r;
    };
    if (scalar(p) != fac.zero) throw PreconditionError("factor " + fac.name + " has the wrong characteristic");
    auto eval = [&](const Poly& poly, Element x) {
      Element r = fac.zero;
      for (std::size_t i = poly.size(); i-- > 0;) r = fadd(fmul(r, x), scalar(poly[i]));
      return r;
    };
    Element root = fac.n;
    for (Element x = 0; x < fac.n && root == fac.n; ++x)
      if (eval(f, x) == fac.zero) root = x;
    if (root == fac.n) throw PreconditionError("factor " + fac.name + " does not contain F" + std::to_string(q));
    std::vector<Element> img(q);
    for (std::size_t a = 0; a < q; ++a) img[a] = eval(digits(a, p, k), root);
    images.push_back(std::move(img));
  }
  std::vector<Element> members;
  for (std::size_t a = 1; a < q; ++a) {
    std::vector<Element> comps;
    for (const auto& img : images) comps.push_back(img[a]);
    members.push_back(ring.encode(comps));
  }
  return UnitSubgroup(ring, members);
}

std::vector<FiniteRing> small_ring_corpus(std::size_t max_size) {
  Bounds b;
  std::vector<FiniteRing> out;
  for (std::size_t n = 2; n <= max_size; ++n) out.push_back(zmod(n, b));
  for (std::size_t q : {4, 8, 9, 16})
    if (q <= max_size) out.push_back(finite_field(q, b));

  // Local rings that are not prime fields.
  struct Local {
    std::size_t p;  // residue characteristic
    bool cyclic;    // Z/p^k
    FiniteRing ring;
  };
  std::vector<Local> local;
  auto add_local = [&](std::size_t p, bool cyclic, FiniteRing r) {
    if (r.size() <= max_size) local.push_back({p, cyclic, std::move(r)});
  };
  for (std::size_t n : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) add_local(prime_power(n).first, true, zmod(n, b));
  for (std::size_t q : {4, 8, 9, 16}) add_local(prime_power(q).first, false, finite_field(q, b));
  const FiniteRing f2 = zmod(2, b), f3 = zmod(3, b), z4 = zmod(4, b), f4 = finite_field(4, b);
  std::vector<FiniteRing> extra;
  extra.push_back(poly_quotient(f2, {0, 0, 1}, "F2[T]/(T^2)", b));
  extra.push_back(poly_quotient(f2, {0, 0, 0, 1}, "F2[T]/(T^3)", b));
  extra.push_back(poly_quotient(f2, {0, 0, 0, 0, 1}, "F2[T]/(T^4)", b));
  extra.push_back(poly_quotient(f3, {0, 0, 1}, "F3[T]/(T^2)", b));
  extra.push_back(poly_quotient(f4, {0, 0, 1}, "F4[T]/(T^2)", b));
  extra.push_back(poly_quotient(z4, {1, 1, 1}, "Z/4[T]/(T^2+T+1)", b));
  extra.push_back(poly_quotient(z4, {0, 0, 1}, "Z/4[T]/(T^2)", b));
  extra.push_back(poly_quotient(z4, {2, 0, 1}, "Z/4[T]/(T^2+2)", b));
  extra.push_back(poly_quotient(extra.front(), {0, 0, 1}, "F2[S,T]/(S^2,T^2)", b));
  for (auto& r : extra) {
    const std::size_t p = prime_power(r.size()).first;
    add_local(p, false, r);
  }
  for (auto& r : extra)
    if (r.size() <= max_size) out.push_back(r);

  // Products of two or more local rings, skipping those isomorphic to Z/n.
  std::vector<std::size_t> pick;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t size) {
    if (pick.size() >= 2) {
      std::set<std::size_t> chars;
      bool cyclic = true;
      for (auto i : pick) {
        cyclic = cyclic && local[i].cyclic && chars.insert(local[i].p).second;
      }
      if (!cyclic) {
        std::vector<FiniteRing> parts;
        for (auto i : pick) parts.push_back(local[i].ring);
        out.push_back(FiniteRing::product(parts));
      }
    }
    for (std::size_t i = start; i < local.size(); ++i) {
      if (size * local[i].ring.size() > max_size) continue;
      pick.push_back(i);
      rec(i, size * local[i].ring.size());
      pick.pop_back();
    }
  };
  rec(0, 1);
  return out;
}

}  // namespace hyperforge
