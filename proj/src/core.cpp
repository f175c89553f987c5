// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperforge/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hyperforge/parallel.hpp"

namespace hyperforge {

Carrier::Carrier(std::size_t size, Element zero, Element one)
    : size_(size), zero_(zero), one_(one) {
  if (size < 2) throw PreconditionError("carrier needs at least the two elements 0 and 1");
  if (zero >= size || one >= size) throw IndexError("zero/one index outside the carrier");
  if (zero == one) throw PreconditionError("zero and one must be distinct");
}

AddTable::AddTable(std::size_t n)
    : n_(n), stride_(words_for(n)), data_(n * n * words_for(n), 0) {}

AddTable AddTable::from_lists(const std::vector<std::vector<std::vector<Element>>>& entries) {
  const std::size_t n = entries.size();
  AddTable t(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (entries[a].size() != n) throw PreconditionError("addition table is not square");
    for (std::size_t b = 0; b < n; ++b)
      for (Element m : entries[a][b]) {
        if (m >= n) throw IndexError("addition entry member " + std::to_string(m) + " out of range");
        t.insert(static_cast<Element>(a), static_cast<Element>(b), m);
      }
  }
  return t;
}

void AddTable::set(Element a, Element b, const Subset& s) {
  auto dst = entry(a, b);
  std::copy(s.words().begin(), s.words().end(), dst.begin());
}

void AddTable::insert(Element a, Element b, Element member) {
  entry(a, b)[member / kWordBits] |= Word{1} << (member % kWordBits);
}

MulTable MulTable::from_rows(const std::vector<std::vector<Element>>& rows) {
  MulTable t(rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (rows[a].size() != rows.size()) throw PreconditionError("multiplication table is not square");
    for (std::size_t b = 0; b < rows.size(); ++b) {
      if (rows[a][b] >= rows.size()) throw IndexError("multiplication entry out of range");
      t(static_cast<Element>(a), static_cast<Element>(b)) = rows[a][b];
    }
  }
  return t;
}

std::string_view to_string(Level level) {
  switch (level) {
    case Level::raw: return "raw";
    case Level::hypergroup: return "hypergroup";
    case Level::kvector: return "kvector";
    case Level::hyperring: return "hyperring";
    case Level::hyperfield: return "hyperfield";
  }
  return "?";
}

std::optional<Level> level_from_string(std::string_view name) {
  for (Level l : {Level::raw, Level::hypergroup, Level::kvector, Level::hyperring, Level::hyperfield})
    if (to_string(l) == name) return l;
  return std::nullopt;
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::shape: return "shape";
    case Axiom::commutativity: return "commutativity";
    case Axiom::associativity: return "associativity";
    case Axiom::neutral_zero: return "neutral zero";
    case Axiom::unique_inverse: return "unique inverse";
    case Axiom::reversibility: return "reversibility";
    case Axiom::idempotent_sum: return "x+x={0,x}";
    case Axiom::mul_closed: return "multiplication table";
    case Axiom::mul_associative: return "multiplicative associativity";
    case Axiom::mul_identity: return "multiplicative identity";
    case Axiom::mul_commutative: return "multiplicative commutativity";
    case Axiom::left_distributive: return "left distributivity";
    case Axiom::right_distributive: return "right distributivity";
    case Axiom::zero_absorbing: return "absorbing zero";
    case Axiom::zero_ne_one: return "0 != 1";
    case Axiom::nonzero_group: return "nonzero elements form a group";
  }
  return "?";
}

namespace {

int chain_rank(Level l) {
  switch (l) {
    case Level::raw: return 0;
    case Level::hypergroup: return 1;
    case Level::kvector: return 1;
    case Level::hyperring: return 2;
    case Level::hyperfield: return 3;
  }
  return 0;
}

}  // namespace

HyperStructure::HyperStructure(Carrier carrier, AddTable add, std::optional<MulTable> mul,
                               bool commutative)
    : carrier_(carrier), add_(std::move(add)), mul_(std::move(mul)), commutative_(commutative) {
  if (add_.size() != carrier_.size())
    throw PreconditionError("addition table size does not match the carrier");
  if (mul_ && mul_->size() != carrier_.size())
    throw PreconditionError("multiplication table size does not match the carrier");
}

const MulTable& HyperStructure::mul_table() const {
  if (!mul_) throw PreconditionError("structure has no multiplication");
  return *mul_;
}

bool HyperStructure::satisfies(Level level) const noexcept {
  if (level == Level::kvector) return kvector_;
  return chain_rank(level_) >= chain_rank(level);
}

Element HyperStructure::neg(Element x) const {
  if (!carrier_.contains(x)) throw IndexError("element " + std::to_string(x) + " out of range");
  if (negation_.empty()) throw PreconditionError("negation needs a structure validated to hypergroup level");
  return negation_[x];
}

void HyperStructure::compute_negation() {
  const std::size_t n = size();
  negation_.assign(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (sum_contains(x, y, zero())) {
        negation_[x] = y;
        break;
      }
}

bool ValidationReport::passed() const { return first_failure() == nullptr; }

const AxiomResult* ValidationReport::find(Axiom axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return &r;
  return nullptr;
}

const AxiomResult* ValidationReport::first_failure() const {
  for (const auto& r : results)
    if (!r.passed) return &r;
  return nullptr;
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  out << "level " << to_string(requested) << ": " << (passed() ? "pass" : "FAIL") << '\n';
  for (const auto& r : results) {
    out << "  " << (r.passed ? "ok   " : "FAIL ") << to_string(r.axiom);
    if (!r.passed) {
      out << "  counterexample (";
      for (std::size_t i = 0; i < r.counterexample.size(); ++i)
        out << (i ? "," : "") << r.counterexample[i];
      out << ')';
    }
    out << '\n';
  }
  return out.str();
}

namespace {

class Checker {
 public:
  Checker(const HyperStructure& r, ValidationReport& report)
      : r_(r), n_(r.size()), stride_(r.add_table().words_per_entry()), report_(report) {}

  // Returns false when a failure makes later checks meaningless.
  bool shape() {
    auto& res = open(Axiom::shape);
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) {
        auto e = r_.sum_words(a, b);
        if (std::all_of(e.begin(), e.end(), [](Word w) { return w == 0; }))
          return fail(res, {a, b});
        // Bits beyond the carrier would be phantom members.
        if (n_ % kWordBits != 0 && (e.back() >> (n_ % kWordBits)) != 0) return fail(res, {a, b});
      }
    return true;
  }

  void commutativity() {
    auto& res = open(Axiom::commutativity);
    for (Element a = 0; a < n_; ++a)
      for (Element b = a + 1; b < n_; ++b)
        if (!kernels::equal(r_.sum_words(a, b), r_.sum_words(b, a))) {
          fail(res, {a, b});
          return;
        }
  }

  void associativity() {
    auto& res = open(Axiom::associativity);
    const auto& t = r_.add_table();
    const std::size_t block = n_ * stride_;
    std::vector<Word> left(block), right(stride_);
    std::vector<std::uint32_t> members;
    const auto& k = kernels::active();
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) {
        // (x+y)+z for every z at once: union of whole rows add[u][*].
        std::fill(left.begin(), left.end(), 0);
        collect(r_.sum_words(x, y), members);
        k.or_rows(left.data(), t.data(), block, members.data(), members.size(), block);
        for (Element z = 0; z < n_; ++z) {
          std::fill(right.begin(), right.end(), 0);
          collect(r_.sum_words(y, z), members);
          k.or_rows(right.data(), t.block(x).data(), stride_, members.data(), members.size(),
                    stride_);
          if (!k.equal(left.data() + z * stride_, right.data(), stride_)) {
            fail(res, {x, y, z});
            return;
          }
        }
      }
  }

  bool neutral_zero() {
    auto& res = open(Axiom::neutral_zero);
    const Element z = r_.zero();
    for (Element x = 0; x < n_; ++x) {
      Subset expect(n_, {x});
      if (!kernels::equal(r_.sum_words(z, x), expect.words()) ||
          !kernels::equal(r_.sum_words(x, z), expect.words()))
        return fail(res, {x});
    }
    return true;
  }

  bool unique_inverse() {
    auto& res = open(Axiom::unique_inverse);
    for (Element x = 0; x < n_; ++x) {
      std::size_t count = 0;
      for (Element y = 0; y < n_; ++y)
        if (r_.sum_contains(x, y, r_.zero())) ++count;
      if (count != 1) return fail(res, {x});
    }
    return true;
  }

  // x in y+z implies z in x+y' for every y' with 0 in y+y'.
  void reversibility() {
    auto& res = open(Axiom::reversibility);
    std::vector<std::vector<Element>> negs(n_);
    for (Element y = 0; y < n_; ++y)
      for (Element w = 0; w < n_; ++w)
        if (r_.sum_contains(y, w, r_.zero())) negs[y].push_back(w);
    for (Element y = 0; y < n_; ++y)
      for (Element z = 0; z < n_; ++z) {
        bool bad = false;
        for_each_bit(r_.sum_words(y, z), [&](Element x) {
          if (bad) return;
          if (negs[y].empty()) {
            fail(res, {x, y, z});
            bad = true;
            return;
          }
          for (Element w : negs[y])
            if (!r_.sum_contains(x, w, z)) {
              fail(res, {x, y, z});
              bad = true;
              return;
            }
        });
        if (bad) return;
      }
  }

  void idempotent_sum() {
    auto& res = open(Axiom::idempotent_sum);
    for (Element x = 0; x < n_; ++x) {
      Subset expect(n_, {r_.zero(), x});
      if (!kernels::equal(r_.sum_words(x, x), expect.words())) {
        fail(res, {x});
        return;
      }
    }
  }

  bool mul_closed() {
    auto& res = open(Axiom::mul_closed);
    if (!r_.has_multiplication()) return fail(res, {});
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        if (r_.mul(a, b) >= n_) return fail(res, {a, b});
    return true;
  }

  void mul_laws() {
    auto& assoc = open(Axiom::mul_associative);
    [&] {
      for (Element a = 0; a < n_; ++a)
        for (Element b = 0; b < n_; ++b)
          for (Element c = 0; c < n_; ++c)
            if (r_.mul(r_.mul(a, b), c) != r_.mul(a, r_.mul(b, c))) {
              fail(assoc, {a, b, c});
              return;
            }
    }();
    auto& ident = open(Axiom::mul_identity);
    for (Element a = 0; a < n_; ++a)
      if (r_.mul(r_.one(), a) != a || r_.mul(a, r_.one()) != a) {
        fail(ident, {a});
        break;
      }
    if (r_.commutative()) {
      auto& comm = open(Axiom::mul_commutative);
      [&] {
        for (Element a = 0; a < n_; ++a)
          for (Element b = a + 1; b < n_; ++b)
            if (r_.mul(a, b) != r_.mul(b, a)) {
              fail(comm, {a, b});
              return;
            }
      }();
    }
  }

  // a(b+c) = ab+ac (left) and (b+c)a = ba+ca (right), as sets.
  void distributivity(bool left) {
    auto& res = open(left ? Axiom::left_distributive : Axiom::right_distributive);
    Subset image(n_);
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b)
        for (Element c = 0; c < n_; ++c) {
          image = Subset(n_);
          for_each_bit(r_.sum_words(b, c),
                       [&](Element s) { image.insert(left ? r_.mul(a, s) : r_.mul(s, a)); });
          auto rhs = left ? r_.sum_words(r_.mul(a, b), r_.mul(a, c))
                          : r_.sum_words(r_.mul(b, a), r_.mul(c, a));
          if (!kernels::equal(image.words(), rhs)) {
            fail(res, {a, b, c});
            return;
          }
        }
  }

  void zero_absorbing() {
    auto& res = open(Axiom::zero_absorbing);
    for (Element a = 0; a < n_; ++a)
      if (r_.mul(r_.zero(), a) != r_.zero() || r_.mul(a, r_.zero()) != r_.zero()) {
        fail(res, {a});
        return;
      }
  }

  void zero_ne_one() {
    auto& res = open(Axiom::zero_ne_one);
    if (r_.zero() == r_.one()) fail(res, {r_.zero()});
  }

  void nonzero_group() {
    auto& res = open(Axiom::nonzero_group);
    const Element z = r_.zero();
    for (Element a = 0; a < n_; ++a) {
      if (a == z) continue;
      for (Element b = 0; b < n_; ++b)
        if (b != z && r_.mul(a, b) == z) {
          fail(res, {a, b});
          return;
        }
      bool has_inverse = false;
      for (Element b = 0; b < n_ && !has_inverse; ++b)
        has_inverse = r_.mul(a, b) == r_.one() && r_.mul(b, a) == r_.one();
      if (!has_inverse) {
        fail(res, {a});
        return;
      }
    }
  }

 private:
  AxiomResult& open(Axiom a) {
    report_.results.push_back(AxiomResult{a, true, {}});
    return report_.results.back();
  }
  bool fail(AxiomResult& res, std::vector<Element> witness) {
    res.passed = false;
    res.counterexample = std::move(witness);
    return false;
  }
  static void collect(std::span<const Word> words, std::vector<std::uint32_t>& out) {
    out.clear();
    for_each_bit(words, [&](Element e) { out.push_back(e); });
  }

  const HyperStructure& r_;
  std::size_t n_;
  std::size_t stride_;
  ValidationReport& report_;
};

}  // namespace

ValidationReport validate(const HyperStructure& structure, Level level) {
  ValidationReport report;
  report.requested = level;
  // Reserve so AxiomResult references stay valid while checks append.
  report.results.reserve(20);
  if (level == Level::raw) return report;
  Checker c(structure, report);
  if (!c.shape()) return report;
  c.commutativity();
  c.associativity();
  c.neutral_zero();
  c.unique_inverse();
  c.reversibility();
  if (level == Level::kvector) {
    c.idempotent_sum();
    return report;
  }
  if (level == Level::hypergroup) return report;
  if (!c.mul_closed()) return report;
  c.mul_laws();
  c.distributivity(true);
  c.distributivity(false);
  c.zero_absorbing();
  c.zero_ne_one();
  if (level == Level::hyperfield) c.nonzero_group();
  return report;
}

ValidationFailure::ValidationFailure(ValidationReport report)
    : Error("validation failed: " + report.to_text()), report_(std::move(report)) {}

HyperStructure certify(HyperStructure structure, Level level) {
  ValidationReport report = validate(structure, level);
  if (!report.passed()) throw ValidationFailure(std::move(report));
  if (level == Level::raw) return structure;
  structure.compute_negation();
  if (level == Level::kvector) {
    structure.kvector_ = true;
    if (structure.level_ == Level::raw) structure.level_ = Level::hypergroup;
  } else {
    if (chain_rank(level) > chain_rank(structure.level_)) structure.level_ = level;
    // The extra K-vector law is a single pass over the diagonal.
    const auto n = structure.size();
    bool kv = true;
    for (Element x = 0; x < n && kv; ++x) {
      Subset expect(n, {structure.zero(), x});
      kv = kernels::equal(structure.sum_words(x, x), expect.words());
    }
    structure.kvector_ = kv;
  }
  return structure;
}

HyperStructure assume_level(HyperStructure structure, Level level, bool kvector) {
  structure.level_ = level == Level::kvector ? Level::hypergroup : level;
  structure.kvector_ = kvector || level == Level::kvector;
  structure.by_construction_ = true;
  structure.compute_negation();
  return structure;
}

Subset hyper_sum(const Subset& a, const Subset& b, const HyperStructure& r) {
  const std::size_t n = r.size();
  if (a.universe() != n || b.universe() != n)
    throw IndexError("subset universe does not match the carrier");
  Subset out(n);
  if (a.empty() || b.empty()) return out;
  std::vector<std::uint32_t> members = b.elements();
  const auto& t = r.add_table();
  const auto& k = kernels::active();
  a.for_each([&](Element x) {
    k.or_rows(out.words().data(), t.block(x).data(), t.words_per_entry(), members.data(),
              members.size(), t.words_per_entry());
  });
  return out;
}

Element negate(Element x, const HyperStructure& r) { return r.neg(x); }

ElementOrder element_order(Element x, const HyperStructure& r) {
  const std::size_t n = r.size();
  if (!r.carrier().contains(x)) throw IndexError("element " + std::to_string(x) + " out of range");
  if (!r.satisfies(Level::hypergroup))
    throw PreconditionError("element_order needs a structure validated to hypergroup level");
  const Subset xs = r.singleton(x);
  const Subset diff = hyper_sum(xs, r.singleton(r.neg(x)), r);  // x - x

  // D_s = s(x-x), increasing in s since 0 is in x-x.
  std::vector<Subset> d{r.singleton(r.zero())};
  while (true) {
    Subset next = hyper_sum(d.back(), diff, r);
    if (next == d.back()) break;
    d.push_back(std::move(next));
  }
  const Subset& dlim = d.back();

  // Multiples r*x, cut off once the sequence repeats or after n^2 steps.
  auto multiples = [&](const Subset& step, std::size_t cap) {
    std::vector<Subset> seq{step};
    std::unordered_set<Subset, SubsetHash> seen{step};
    while (seq.size() < cap) {
      Subset next = hyper_sum(seq.back(), step, r);
      if (!seen.insert(next).second) break;
      seq.push_back(std::move(next));
    }
    return seq;
  };
  const std::size_t cap = n * n;
  const auto rx = multiples(xs, cap);
  std::optional<std::size_t> h;
  for (std::size_t i = 0; i < rx.size(); ++i)
    if (rx[i].intersects(dlim)) {
      h = i + 1;
      break;
    }
  if (!h) return {};
  // T_m = (m h) x for m >= 1; negative m mirror these since D_s is symmetric.
  const auto mh = multiples(rx[*h - 1], cap);
  for (std::size_t s = 0; s < d.size(); ++s)
    for (const auto& t : mh)
      if (t.intersects(d[s])) return {h, s};
  return {h, std::nullopt};
}

std::pair<std::size_t, std::size_t> power_signature(const HyperStructure& r, Element x) {
  std::map<Element, std::size_t> first_seen;
  Element p = x;
  for (std::size_t k = 1;; ++k) {
    auto [it, fresh] = first_seen.emplace(p, k);
    if (!fresh) return {it->second, k - it->second};
    p = r.mul(p, x);
  }
}

namespace {

using Key = std::vector<std::uint64_t>;

std::vector<Key> element_keys(const HyperStructure& r) {
  const std::size_t n = r.size();
  std::vector<Key> keys(n);
  for (Element x = 0; x < n; ++x) {
    auto [pre, period] = power_signature(r, x);
    Key k{pre, period, r.sum(x, x).count(), r.sum(x, r.one()).count(),
          static_cast<std::uint64_t>(r.mul(x, x) == x)};
    std::vector<std::uint64_t> degrees;
    std::uint64_t annihilating = 0;
    for (Element y = 0; y < n; ++y) {
      degrees.push_back(r.sum(x, y).count());
      annihilating += r.mul(x, y) == r.zero();
    }
    std::sort(degrees.begin(), degrees.end());
    k.push_back(annihilating);
    k.insert(k.end(), degrees.begin(), degrees.end());
    keys[x] = std::move(k);
  }
  return keys;
}

class IsoSearch {
 public:
  IsoSearch(const HyperStructure& a, const HyperStructure& b, const std::vector<Key>& ka,
            const std::vector<Key>& kb)
      : a_(a), b_(b), n_(a.size()), ka_(ka), kb_(kb) {}

  // Order in which source elements are branched on: largest multiplicative
  // period first, so one choice forces a whole cyclic subgroup.
  std::vector<Element> branch_order() const {
    std::vector<Element> order(n_);
    for (Element i = 0; i < n_; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) {
      return power_signature(a_, x).second > power_signature(a_, y).second;
    });
    return order;
  }

  std::vector<Element> candidates(Element x) const {
    std::vector<Element> out;
    for (Element y = 0; y < n_; ++y)
      if (kb_[y] == ka_[x]) out.push_back(y);
    return out;
  }

  /// Search with `first` pinned to `image`, returns a full map or nothing.
  std::optional<std::vector<Element>> run(Element first, Element image) {
    f_.assign(n_, kNone);
    used_.assign(n_, false);
    assigned_.clear();
    if (!assign(a_.zero(), b_.zero()) || !assign(a_.one(), b_.one())) return std::nullopt;
    if (f_[first] == kNone) {
      if (!assign(first, image)) return std::nullopt;
    } else if (f_[first] != image) {
      return std::nullopt;
    }
    order_ = branch_order();
    if (recurse()) return f_;
    return std::nullopt;
  }

 private:
  static constexpr Element kNone = ~Element{0};

  bool recurse() {
    Element x = kNone;
    for (Element e : order_)
      if (f_[e] == kNone) {
        x = e;
        break;
      }
    if (x == kNone) return true;
    for (Element y : candidates(x)) {
      if (used_[y]) continue;
      const std::size_t mark = assigned_.size();
      if (assign(x, y) && recurse()) return true;
      undo(mark);
    }
    return false;
  }

  void undo(std::size_t mark) {
    while (assigned_.size() > mark) {
      Element e = assigned_.back();
      assigned_.pop_back();
      used_[f_[e]] = false;
      f_[e] = kNone;
    }
  }

  // Assigns x -> y and closes the partial map under products, checking
  // additive consistency among assigned elements.
  bool assign(Element x, Element y) {
    std::vector<std::pair<Element, Element>> queue{{x, y}};
    while (!queue.empty()) {
      auto [s, t] = queue.back();
      queue.pop_back();
      if (f_[s] != kNone) {
        if (f_[s] != t) return false;
        continue;
      }
      if (used_[t] || ka_[s] != kb_[t]) return false;
      f_[s] = t;
      used_[t] = true;
      assigned_.push_back(s);
      for (Element u : assigned_) {
        const Element v = f_[u];
        for (auto [p, q] : {std::pair{a_.mul(s, u), b_.mul(t, v)}, std::pair{a_.mul(u, s), b_.mul(v, t)}})
          if (f_[p] == kNone)
            queue.emplace_back(p, q);
          else if (f_[p] != q)
            return false;
      }
      for (Element u : assigned_)
        for (Element w : assigned_)
          if (a_.sum_contains(s, u, w) != b_.sum_contains(t, f_[u], f_[w]) ||
              a_.sum_contains(u, w, s) != b_.sum_contains(f_[u], f_[w], t))
            return false;
    }
    return true;
  }

  const HyperStructure& a_;
  const HyperStructure& b_;
  std::size_t n_;
  const std::vector<Key>& ka_;
  const std::vector<Key>& kb_;
  std::vector<Element> f_;
  std::vector<bool> used_;
  std::vector<Element> assigned_;
  std::vector<Element> order_;
};

}  // namespace

bool is_isomorphism(const HyperStructure& r1, const HyperStructure& r2,
                    std::span<const Element> f) {
  const std::size_t n = r1.size();
  if (r2.size() != n || f.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Element v : f) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  if (f[r1.zero()] != r2.zero() || f[r1.one()] != r2.one()) return false;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (f[r1.mul(a, b)] != r2.mul(f[a], f[b])) return false;
      Subset image(n);
      r1.sum(a, b).for_each([&](Element s) { image.insert(f[s]); });
      if (!(image == r2.sum(f[a], f[b]))) return false;
    }
  return true;
}

std::optional<std::vector<Element>> is_isomorphic(const HyperStructure& r1,
                                                  const HyperStructure& r2, unsigned jobs) {
  if (!r1.satisfies(Level::hyperring) || !r2.satisfies(Level::hyperring))
    throw PreconditionError("is_isomorphic needs structures validated to hyperring level");
  if (r1.size() != r2.size()) return std::nullopt;
  const auto k1 = element_keys(r1);
  const auto k2 = element_keys(r2);
  auto s1 = k1, s2 = k2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;

  IsoSearch probe(r1, r2, k1, k2);
  const auto order = probe.branch_order();
  // The first branching element not fixed by 0 and 1 splits the work.
  Element pivot = order.front();
  for (Element e : order)
    if (e != r1.zero() && e != r1.one()) {
      pivot = e;
      break;
    }
  const auto choices = probe.candidates(pivot);
  auto found = parallel_find_first<std::vector<Element>>(
      choices.size(), jobs, [&](std::size_t i) {
        IsoSearch search(r1, r2, k1, k2);
        return search.run(pivot, choices[i]);
      });
  if (!found) return std::nullopt;
  if (!is_isomorphism(r1, r2, found->second))
    throw InvariantViolation("isomorphism search returned a map that fails verification");
  return std::move(found->second);
}

}  // namespace hyperforge
