// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperforge/homomorphisms.hpp"

#include <algorithm>
#include <set>

#include "hyperforge/errors.hpp"
#include "hyperforge/parallel.hpp"

namespace hyperforge {

bool is_hom(const HyperStructure& source, const HyperStructure& target,
            std::span<const Element> f) {
  const std::size_t n = source.size();
  if (f.size() != n) return false;
  for (Element v : f)
    if (v >= target.size()) return false;
  if (f[source.zero()] != target.zero() || f[source.one()] != target.one()) return false;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (f[source.mul(a, b)] != target.mul(f[a], f[b])) return false;
      bool ok = true;
      for_each_bit(source.sum_words(a, b), [&](Element c) {
        ok = ok && target.sum_contains(f[a], f[b], f[c]);
      });
      if (!ok) return false;
    }
  return true;
}

namespace {

bool is_iso_map(const HyperStructure& s, const HyperStructure& t, std::span<const Element> f) {
  return is_isomorphism(s, t, f);
}

}  // namespace

bool is_epimorphism(const HomWitness& h) {
  if (!h.is_hom || h.source == nullptr || h.target == nullptr) return false;
  const auto& s = *h.source;
  const auto& t = *h.target;
  const std::size_t m = t.size();
  std::vector<std::vector<Element>> fiber(m);
  for (Element a = 0; a < s.size(); ++a) fiber[h.map[a]].push_back(a);
  for (const auto& f : fiber)
    if (f.empty()) return false;
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) {
      Subset image(m);
      for (Element a : fiber[x])
        for (Element b : fiber[y]) s.sum(a, b).for_each([&](Element c) { image.insert(h.map[c]); });
      if (!(image == t.sum(x, y))) return false;
    }
  return true;
}

HomWitness make_witness(const HyperStructure& source, const HyperStructure& target,
                        std::vector<Element> f) {
  HomWitness w;
  w.source = &source;
  w.target = &target;
  w.map = std::move(f);
  w.is_hom = is_hom(source, target, w.map);
  w.is_epi = w.is_hom && is_epimorphism(w);
  w.is_iso = w.is_hom && source.size() == target.size() && is_iso_map(source, target, w.map);
  return w;
}

namespace {

constexpr Element kNone = ~Element{0};

// Greedy generators of the multiplicative monoid beyond 0 and 1, longest
// power cycles first so that one image fixes as much as possible.
std::vector<Element> monoid_generators(const HyperStructure& r) {
  const std::size_t n = r.size();
  std::vector<bool> in(n, false);
  std::vector<Element> members;
  auto close = [&](Element seed) {
    std::vector<Element> frontier{seed};
    if (in[seed]) return;
    in[seed] = true;
    members.push_back(seed);
    while (!frontier.empty()) {
      std::vector<Element> next;
      for (Element x : frontier)
        for (std::size_t i = 0; i < members.size(); ++i)
          for (Element p : {r.mul(x, members[i]), r.mul(members[i], x)})
            if (!in[p]) {
              in[p] = true;
              members.push_back(p);
              next.push_back(p);
            }
      frontier = std::move(next);
    }
  };
  close(r.zero());
  close(r.one());
  std::vector<Element> order(n);
  for (Element i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return power_signature(r, a).second > power_signature(r, b).second;
  });
  std::vector<Element> gens;
  for (Element x : order)
    if (!in[x]) {
      gens.push_back(x);
      close(x);
    }
  return gens;
}

class HomSearch {
 public:
  HomSearch(const HyperStructure& s, const HyperStructure& t, const std::vector<Element>& gens,
            std::size_t budget)
      : s_(s), t_(t), gens_(gens), budget_(budget), f_(s.size(), kNone) {}

  // Runs the branch with the first generator (if any) sent to `first_image`.
  void run(std::optional<Element> first_image) {
    if (!assign(s_.zero(), t_.zero()) || !assign(s_.one(), t_.one())) return;
    if (first_image) {
      ++nodes_;
      if (!assign(gens_.front(), *first_image)) return;
    }
    recurse();
  }

  std::vector<std::vector<Element>> found;
  std::size_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  void recurse() {
    if (exhausted_) return;
    Element g = kNone;
    for (Element x : gens_)
      if (f_[x] == kNone) {
        g = x;
        break;
      }
    if (g == kNone) {
      // Generators fix everything; the map is complete.
      found.push_back(f_);
      return;
    }
    for (Element y = 0; y < t_.size(); ++y) {
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return;
      }
      const std::size_t mark = assigned_.size();
      if (assign(g, y)) recurse();
      undo(mark);
      if (exhausted_) return;
    }
  }

  void undo(std::size_t mark) {
    while (assigned_.size() > mark) {
      f_[assigned_.back()] = kNone;
      assigned_.pop_back();
    }
  }

  bool assign(Element x, Element y) {
    std::vector<std::pair<Element, Element>> queue{{x, y}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      if (f_[a] != kNone) {
        if (f_[a] != b) return false;
        continue;
      }
      f_[a] = b;
      assigned_.push_back(a);
      for (Element u : assigned_) {
        const Element fu = f_[u];
        for (auto [p, q] : {std::pair{s_.mul(a, u), t_.mul(b, fu)}, std::pair{s_.mul(u, a), t_.mul(fu, b)}}) {
          if (f_[p] == kNone)
            queue.emplace_back(p, q);
          else if (f_[p] != q)
            return false;
        }
      }
      // a as a summand, and a as a member of a sum of assigned elements.
      for (Element u : assigned_) {
        bool ok = true;
        for_each_bit(s_.sum_words(a, u), [&](Element c) {
          if (ok && f_[c] != kNone) ok = t_.sum_contains(b, f_[u], f_[c]);
        });
        if (!ok) return false;
        for (Element w : assigned_)
          if (s_.sum_contains(u, w, a) && !t_.sum_contains(f_[u], f_[w], b)) return false;
      }
    }
    return true;
  }

  const HyperStructure& s_;
  const HyperStructure& t_;
  const std::vector<Element>& gens_;
  std::size_t budget_;
  std::vector<Element> f_;
  std::vector<Element> assigned_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

struct BranchResult {
  std::vector<std::vector<Element>> maps;
  std::size_t nodes = 0;
  bool exhausted = false;
};

}  // namespace

HomEnumeration enumerate_homs(const HyperStructure& source, const HyperStructure& target,
                              std::size_t budget, unsigned jobs) {
  if (budget == 0) throw PreconditionError("search budget must be positive");
  if (!source.satisfies(Level::hyperring) || !target.satisfies(Level::hyperring))
    throw PreconditionError("enumerate_homs needs structures validated to hyperring level");
  const auto gens = monoid_generators(source);
  const std::size_t branches = gens.empty() ? 1 : target.size();
  auto results = parallel_map<BranchResult>(branches, jobs, [&](std::size_t i) {
    HomSearch search(source, target, gens, budget);
    search.run(gens.empty() ? std::nullopt : std::optional<Element>(static_cast<Element>(i)));
    return BranchResult{std::move(search.found), search.nodes(), search.exhausted()};
  });
  HomEnumeration out;
  std::vector<std::vector<Element>> maps;
  for (auto& r : results) {
    out.nodes += r.nodes;
    out.complete = out.complete && !r.exhausted;
    for (auto& m : r.maps) maps.push_back(std::move(m));
  }
  std::sort(maps.begin(), maps.end());
  for (auto& m : maps) {
    HomWitness w = make_witness(source, target, std::move(m));
    if (!w.is_hom) throw InvariantViolation("hom search produced a map that fails the hom check");
    out.homs.push_back(std::move(w));
  }
  return out;
}

Subset k_span(const HyperStructure& e, const Subset& seed) {
  Subset span = seed;
  span.insert(e.zero());
  std::vector<Element> work = span.elements();
  std::vector<Element> members = work;
  while (!work.empty()) {
    const Element x = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < members.size(); ++i)
      for_each_bit(e.sum_words(x, members[i]), [&](Element c) {
        if (!span.contains(c)) {
          span.insert(c);
          members.push_back(c);
          work.push_back(c);
        }
      });
  }
  return span;
}

std::vector<Element> k_basis(const HyperStructure& e, std::optional<Subset> within) {
  if (!e.is_kvector()) throw PreconditionError("K-dimension needs a structure validated as a K-vector space");
  const std::size_t n = e.size();
  Subset pool = within ? *within : Subset::full(n);
  pool.erase(e.zero());
  Subset span = e.singleton(e.zero());
  std::vector<Element> basis;
  pool.for_each([&](Element x) {
    if (span.contains(x)) return;
    basis.push_back(x);
    // Join of a subspace W and a point x is W u (W + x).
    span |= hyper_sum(span, e.singleton(x), e);
  });
  return basis;
}

std::size_t k_dimension(const HyperStructure& e, std::optional<Subset> within) {
  return k_basis(e, std::move(within)).size();
}

LiftResult lift_hom(const HomWitness& h, const QuotientStructure& source,
                    const QuotientStructure& target) {
  if (!h.is_hom) throw PreconditionError("lift_hom needs a verified homomorphism");
  if (h.map.size() != source.structure.size() || !same_tables(*h.source, source.structure) ||
      !same_tables(*h.target, target.structure))
    throw PreconditionError("witness does not connect the given quotients");
  const FiniteRing& a1 = *source.ring;
  const FiniteRing& a2 = *target.ring;
  for (const auto* q : {&source, &target})
    if (q->subgroup.order() < 2 || !subfield_criterion(*q->ring, q->subgroup))
      throw PreconditionError("lift_hom needs K = {0} u G to be a field with more than two elements");

  LiftResult result;
  Subset range(target.structure.size());
  for (Element v : h.map) range.insert(v);
  result.range_dimension = k_dimension(target.structure, range);
  if (result.range_dimension <= 2) return result;

  std::vector<Element> k1{a1.zero()}, k2{a2.zero()};
  for (Element g : source.subgroup.members()) k1.push_back(g);
  for (Element g : target.subgroup.members()) k2.push_back(g);

  // Field embeddings K1 -> K2 through the image of a generator of K1^x.
  const std::size_t order1 = source.subgroup.order();
  Element gamma = a1.one();
  for (Element g : source.subgroup.members()) {
    std::size_t k = 1;
    for (Element p = g; p != a1.one(); p = a1.mul(p, g)) ++k;
    if (k == order1) {
      gamma = g;
      break;
    }
  }
  std::vector<std::vector<std::pair<Element, Element>>> embeddings;  // pairs (x, sigma x)
  for (Element tau : target.subgroup.members()) {
    std::vector<std::pair<Element, Element>> sigma{{a1.zero(), a2.zero()}};
    Element x = a1.one(), y = a2.one();
    bool ok = true;
    for (std::size_t k = 0; k < order1; ++k) {
      sigma.emplace_back(x, y);
      x = a1.mul(x, gamma);
      y = a2.mul(y, tau);
    }
    ok = y == a2.one();
    auto image = [&](Element v) {
      for (auto [s, t] : sigma)
        if (s == v) return t;
      return kNone;
    };
    for (auto [s, t] : sigma)
      for (auto [u, v] : sigma) ok = ok && image(a1.add(s, u)) == a2.add(t, v);
    if (ok) embeddings.push_back(std::move(sigma));
  }
  result.embeddings = embeddings.size();

  // K1-basis of A1 starting from 1, with coordinates of every element.
  std::vector<Element> basis{a1.one()};
  std::vector<std::vector<Element>> coords(a1.size());
  std::vector<bool> reached(a1.size(), false);
  std::vector<Element> span;
  for (Element l : k1) {
    Element v = a1.mul(l, a1.one());
    reached[v] = true;
    coords[v] = {l};
    span.push_back(v);
  }
  for (Element x = 0; x < a1.size(); ++x) {
    if (reached[x]) continue;
    basis.push_back(x);
    std::vector<Element> next;
    for (Element s : span) {
      const auto base = coords[s];
      for (Element l : k1) {
        const Element v = a1.add(s, a1.mul(l, x));
        auto c = base;
        c.push_back(l);
        reached[v] = true;
        coords[v] = std::move(c);
        next.push_back(v);
      }
    }
    span = std::move(next);
  }

  std::set<std::vector<Element>> lifts;
  for (const auto& sigma : embeddings) {
    auto apply_sigma = [&](Element v) {
      for (auto [s, t] : sigma)
        if (s == v) return t;
      return kNone;
    };
    // Candidate images of each basis vector: the class prescribed by h.
    std::vector<std::vector<Element>> options(basis.size());
    options[0] = {a2.one()};
    for (std::size_t j = 1; j < basis.size(); ++j) {
      const Element cls = h.map[source.class_of[basis[j]]];
      for (Element u : target.subgroup.members()) {
        Element v = a2.mul(target.representative[cls], u);
        if (std::find(options[j].begin(), options[j].end(), v) == options[j].end()) options[j].push_back(v);
      }
    }
    std::vector<std::size_t> pick(basis.size(), 0);
    while (true) {
      ++result.candidates;
      std::vector<Element> phi(a1.size());
      for (Element x = 0; x < a1.size(); ++x) {
        Element v = a2.zero();
        for (std::size_t j = 0; j < basis.size(); ++j)
          v = a2.add(v, a2.mul(apply_sigma(coords[x][j]), options[j][pick[j]]));
        phi[x] = v;
      }
      bool ok = true;
      for (Element x = 0; x < a1.size() && ok; ++x)
        ok = target.class_of[phi[x]] == h.map[source.class_of[x]];
      for (Element x = 0; x < a1.size() && ok; ++x)
        for (Element y = 0; y < a1.size() && ok; ++y) ok = phi[a1.mul(x, y)] == a2.mul(phi[x], phi[y]);
      if (ok) lifts.insert(std::move(phi));
      std::size_t j = 1;
      while (j < pick.size() && ++pick[j] == options[j].size()) pick[j++] = 0;
      if (j >= pick.size()) break;
    }
  }
  if (lifts.size() != 1)
    throw InvariantViolation("hom with range of K-dimension " + std::to_string(result.range_dimension) +
                             " has " + std::to_string(lifts.size()) + " ring lifts, expected exactly one");
  result.kind = LiftResult::Kind::lifted;
  result.ring_map = *lifts.begin();
  return result;
}

}  // namespace hyperforge
