// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperforge/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hyperforge/errors.hpp"
#include "hyperforge/parallel.hpp"

namespace hyperforge {

namespace {

std::string join(const std::vector<Element>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

// Per-pair line lookup and per-line point sets.
struct Incidence {
  std::size_t n;
  std::vector<std::uint32_t> count;  // lines through each ordered pair
  std::vector<std::size_t> first;    // first such line
  std::vector<Subset> line_sets;

  explicit Incidence(const IncidenceGeometry& g)
      : n(g.points), count(n * n, 0), first(n * n, SIZE_MAX) {
    for (std::size_t l = 0; l < g.lines.size(); ++l) {
      line_sets.push_back(Subset::from(n, g.lines[l]));
      for (Element a : g.lines[l])
        for (Element b : g.lines[l]) {
          if (a == b) continue;
          if (count[a * n + b]++ == 0) first[a * n + b] = l;
        }
    }
  }
  std::size_t line(Element a, Element b) const { return first[a * n + b]; }
  bool all_pairs_unique() const {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (a != b && count[a * n + b] != 1) return false;
    return true;
  }
};

std::vector<bool> units_of(const MulTable& mul, Element one) {
  std::vector<bool> unit(mul.size(), false);
  for (Element x = 0; x < mul.size(); ++x)
    for (Element y = 0; y < mul.size() && !unit[x]; ++y) unit[x] = mul(x, y) == one;
  return unit;
}

Element inverse_of(const MulTable& mul, Element one, Element a) {
  for (Element y = 0; y < mul.size(); ++y)
    if (mul(a, y) == one) return y;
  throw PreconditionError("element " + std::to_string(a) + " has no inverse");
}

// Union of the classes of `b` meeting each class of `a`, indexed by the
// label of the class in `a`.
std::vector<Subset> composed_images(const Partition& a, const Partition& b) {
  const std::size_t n = a.class_of.size();
  std::vector<Subset> b_class(n, Subset(n));
  for (Element x = 0; x < n; ++x) b_class[b.class_of[x]].insert(x);
  std::vector<Subset> out(n, Subset(n));
  for (Element x = 0; x < n; ++x) out[a.class_of[x]] |= b_class[b.class_of[x]];
  return out;
}

}  // namespace

std::optional<Element> composition_mismatch(const Partition& a, const Partition& b) {
  const auto ab = composed_images(a, b);
  const auto ba = composed_images(b, a);
  for (Element x = 0; x < a.class_of.size(); ++x)
    if (!(ab[a.class_of[x]] == ba[b.class_of[x]])) return x;
  return std::nullopt;
}

Partition conjugate_relation(const MulTable& mul, Element one, const Partition& s, Element a) {
  const std::size_t n = mul.size();
  const Element ainv = inverse_of(mul, one, a);
  std::vector<Element> key(n);
  for (Element x = 0; x < n; ++x) key[x] = s.class_of[mul(ainv, x)];
  std::map<Element, Element> label;
  Partition p;
  p.class_of.resize(n);
  for (Element x = 0; x < n; ++x) {
    p.class_of[x] = label.emplace(key[x], x).first->second;
  }
  return p;
}

namespace {

Element find_identity(const MulTable& mul, Element zero) {
  for (Element e = 0; e < mul.size(); ++e) {
    if (e == zero) continue;
    bool ok = true;
    for (Element x = 0; x < mul.size() && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) return e;
  }
  throw PreconditionError("multiplication has no identity");
}

// H = R \ {zero} is an abelian group with zero absorbing.
void check_abelian_monoid(const MulTable& mul, Element zero, Element one) {
  const std::size_t n = mul.size();
  if (zero >= n || one >= n || zero == one) throw PreconditionError("zero and one must be distinct carrier elements");
  for (Element x = 0; x < n; ++x) {
    if (mul(zero, x) != zero || mul(x, zero) != zero)
      throw PreconditionError("0 * " + std::to_string(x) + " is not 0");
    if (mul(one, x) != x) throw PreconditionError("1 * " + std::to_string(x) + " != " + std::to_string(x));
  }
  for (Element x = 0; x < n; ++x) {
    if (x == zero) continue;
    std::vector<bool> hit(n, false);
    for (Element y = 0; y < n; ++y) {
      if (y == zero) continue;
      const Element p = mul(x, y);
      if (p == zero || hit[p]) throw PreconditionError("nonzero elements do not form a group under the table");
      hit[p] = true;
      if (p != mul(y, x)) throw PreconditionError("multiplication is not commutative");
    }
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw PreconditionError("multiplication is not associative");
}

}  // namespace

IncidenceGeometry IncidenceGeometry::make(std::size_t points, std::vector<std::vector<Element>> lines) {
  for (auto& l : lines) {
    std::sort(l.begin(), l.end());
    if (l.size() < 2) throw PreconditionError("line " + join(l) + " has fewer than two points");
    if (std::adjacent_find(l.begin(), l.end()) != l.end())
      throw PreconditionError("line " + join(l) + " repeats a point");
    if (l.back() >= points)
      throw PreconditionError("line " + join(l) + " names a point outside 0.." + std::to_string(points - 1));
  }
  std::sort(lines.begin(), lines.end());
  if (auto it = std::adjacent_find(lines.begin(), lines.end()); it != lines.end())
    throw PreconditionError("line " + join(*it) + " is listed twice");
  return IncidenceGeometry{points, std::move(lines)};
}

std::optional<std::size_t> IncidenceGeometry::line_through(Element a, Element b) const {
  for (std::size_t l = 0; l < lines.size(); ++l)
    if (std::binary_search(lines[l].begin(), lines[l].end(), a) &&
        std::binary_search(lines[l].begin(), lines[l].end(), b))
      return l;
  return std::nullopt;
}

std::vector<Element> nonzero_elements(const HyperStructure& e) {
  std::vector<Element> out;
  for (Element x = 0; x < e.size(); ++x)
    if (x != e.zero()) out.push_back(x);
  return out;
}

HyperStructure homogeneous_structure(const MulTable& mul, Element zero, Element one, const std::vector<Subset>& s) {
  const std::size_t n = mul.size();
  AddTable add(n);
  std::vector<Element> inv(n, zero);
  for (Element x = 0; x < n; ++x)
    if (x != zero) inv[x] = inverse_of(mul, one, x);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (x == zero) {
        add.insert(x, y, y);
        continue;
      }
      s[mul(y, inv[x])].for_each([&](Element w) { add.insert(x, y, mul(x, w)); });
    }
  return HyperStructure(Carrier(n, zero, one), std::move(add), mul);
}

IncidenceGeometry geometry_of(const HyperStructure& e) {
  if (!e.is_kvector()) throw PreconditionError("geometry_of needs a structure validated as a K-vector space");
  const auto pts = nonzero_elements(e);
  std::vector<Element> point_of(e.size(), 0);
  for (Element p = 0; p < pts.size(); ++p) point_of[pts[p]] = p;
  std::set<std::vector<Element>> lines;
  for (Element i = 0; i < pts.size(); ++i)
    for (Element j = i + 1; j < pts.size(); ++j) {
      std::vector<Element> line{i, j};
      e.sum(pts[i], pts[j]).for_each([&](Element c) { line.push_back(point_of[c]); });
      std::sort(line.begin(), line.end());
      line.erase(std::unique(line.begin(), line.end()), line.end());
      lines.insert(std::move(line));
    }
  return IncidenceGeometry::make(pts.size(), {lines.begin(), lines.end()});
}

std::string GeometryReport::to_text() const {
  std::string out;
  auto line = [&](const char* name, const AxiomVerdict& v) {
    out += std::string(name) + (v.passed ? " pass" : " FAIL " + v.counterexample) + "\n";
  };
  line("P1", p1);
  line("P2", p2);
  line("P3", p3);
  line("P3'", p3_strong);
  return out;
}

GeometryReport check_projective_axioms(const IncidenceGeometry& g, unsigned jobs) {
  GeometryReport report;
  const Incidence inc(g);
  const std::size_t n = g.points;
  for (Element a = 0; a < n && report.p1.passed; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (inc.count[a * n + b] != 1) {
        report.p1 = {false, "points " + std::to_string(a) + "," + std::to_string(b) + " lie on " +
                                std::to_string(inc.count[a * n + b]) + " lines"};
        break;
      }
  for (const auto& l : g.lines) {
    if (report.p3.passed && l.size() < 3) report.p3 = {false, "line " + join(l) + " has " + std::to_string(l.size()) + " points"};
    if (report.p3_strong.passed && l.size() < 4)
      report.p3_strong = {false, "line " + join(l) + " has " + std::to_string(l.size()) + " points"};
  }
  if (!report.p1.passed) {
    report.p2 = {false, "undefined: lines through pairs are not unique"};
    return report;
  }
  // For x != y and z off L(x,y): L(y,z) meets L(t,u) for t on L(x,y), u on L(x,z), both != x.
  auto found = parallel_map<std::string>(n, jobs, [&](std::size_t xi) -> std::string {
    const Element x = static_cast<Element>(xi);
    for (Element y = 0; y < n; ++y) {
      if (y == x) continue;
      const std::size_t lxy = inc.line(x, y);
      for (Element z = 0; z < n; ++z) {
        if (inc.line_sets[lxy].contains(z)) continue;
        const std::size_t lyz = inc.line(y, z), lxz = inc.line(x, z);
        for (Element t : g.lines[lxy]) {
          if (t == x) continue;
          for (Element u : g.lines[lxz]) {
            if (u == x) continue;
            if (!inc.line_sets[lyz].intersects(inc.line_sets[inc.line(t, u)]))
              return "x=" + std::to_string(x) + " y=" + std::to_string(y) + " z=" + std::to_string(z) +
                     " t=" + std::to_string(t) + " u=" + std::to_string(u);
          }
        }
      }
    }
    return {};
  });
  for (const auto& f : found)
    if (!f.empty()) {
      report.p2 = {false, f};
      break;
    }
  return report;
}

std::size_t geometry_dimension(const IncidenceGeometry& g) {
  if (g.points == 0) return 0;
  std::vector<Subset> lines;
  for (const auto& l : g.lines) lines.push_back(Subset::from(g.points, l));
  Subset span(g.points);
  std::size_t generators = 0;
  for (Element p = 0; p < g.points; ++p) {
    if (span.contains(p)) continue;
    ++generators;
    span.insert(p);
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& l : lines)
        if ((l & span).count() >= 2 && !l.is_subset_of(span)) {
          span |= l;
          grew = true;
        }
    }
  }
  return generators - 1;
}

HyperStructure kvector_from_geometry(const IncidenceGeometry& g) {
  const auto report = check_projective_axioms(g);
  for (auto [name, v] : {std::pair{"P1", &report.p1}, {"P2", &report.p2}, {"P3'", &report.p3_strong}})
    if (!v->passed) throw PreconditionError(std::string(name) + " fails: " + v->counterexample);
  const std::size_t n = g.points + 1;
  const Incidence inc(g);
  AddTable add(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (x == 0 || y == 0) {
        add.insert(x, y, x == 0 ? y : x);
      } else if (x == y) {
        add.insert(x, y, 0);
        add.insert(x, y, x);
      } else {
        for (Element p : g.lines[inc.line(x - 1, y - 1)])
          if (p + 1 != x && p + 1 != y) add.insert(x, y, p + 1);
      }
    }
  const Carrier carrier(n, 0, 1);
  try {
    return certify(HyperStructure(carrier, std::move(add), std::nullopt), Level::kvector);
  } catch (const ValidationFailure& f) {
    throw InvariantViolation("projective geometry gave an invalid K-vector space: " + f.report().to_text());
  }
}

std::string_view to_string(Desargues d) {
  switch (d) {
    case Desargues::yes: return "yes";
    case Desargues::no: return "no";
    case Desargues::vacuous: return "vacuous";
  }
  return "?";
}

DesarguesResult is_desarguesian(const IncidenceGeometry& g, unsigned jobs) {
  const auto report = check_projective_axioms(g, jobs);
  if (!report.projective()) throw PreconditionError("Desargues test needs P1, P2 and P3':\n" + report.to_text());
  DesarguesResult result;
  if (g.lines.size() <= 1 || geometry_dimension(g) != 2) return result;
  const Incidence inc(g);
  const std::size_t n = g.points;
  auto meet = [&](std::size_t l1, std::size_t l2) { return (inc.line_sets[l1] & inc.line_sets[l2]).first(); };
  struct Partial {
    std::size_t count = 0;
    std::string counterexample;
  };
  auto parts = parallel_map<Partial>(n, jobs, [&](std::size_t oi) {
    Partial part;
    const Element o = static_cast<Element>(oi);
    for (Element a = 0; a < n; ++a) {
      if (a == o) continue;
      const std::size_t oa = inc.line(o, a);
      for (Element b = 0; b < n; ++b) {
        if (b == o || inc.line_sets[oa].contains(b)) continue;
        const std::size_t ob = inc.line(o, b), ab = inc.line(a, b);
        for (Element c = 0; c < n; ++c) {
          if (c == o || inc.line_sets[oa].contains(c) || inc.line_sets[ob].contains(c) ||
              inc.line_sets[ab].contains(c))
            continue;
          const std::size_t oc = inc.line(o, c), bc = inc.line(b, c), ca = inc.line(c, a);
          for (Element a2 : g.lines[oa]) {
            if (a2 == o || a2 == a) continue;
            for (Element b2 : g.lines[ob]) {
              if (b2 == o || b2 == b) continue;
              const std::size_t ab2 = inc.line(a2, b2);
              for (Element c2 : g.lines[oc]) {
                if (c2 == o || c2 == c || inc.line_sets[ab2].contains(c2)) continue;
                ++part.count;
                const Element p = static_cast<Element>(meet(ab, ab2));
                const Element q = static_cast<Element>(meet(bc, inc.line(b2, c2)));
                const Element r = static_cast<Element>(meet(ca, inc.line(c2, a2)));
                if (part.counterexample.empty() && !inc.line_sets[inc.line(p, q)].contains(r))
                  part.counterexample = "center " + std::to_string(o) + ", triangles " + join({a, b, c}) + " and " +
                                        join({a2, b2, c2});
              }
            }
          }
        }
      }
    }
    return part;
  });
  result.verdict = Desargues::yes;
  for (const auto& p : parts) {
    result.configurations += p.count;
    if (result.verdict == Desargues::yes && !p.counterexample.empty()) {
      result.verdict = Desargues::no;
      result.counterexample = p.counterexample;
    }
  }
  return result;
}

bool incidence_group_check(const IncidenceGeometry& g, const std::vector<std::vector<Element>>& perms) {
  const std::size_t n = g.points;
  if (perms.size() != n) throw PreconditionError("a simply transitive action needs one permutation per point");
  for (const auto& p : perms) {
    if (p.size() != n) throw PreconditionError("permutation has the wrong length");
    std::vector<bool> hit(n, false);
    for (Element x : p) {
      if (x >= n || hit[x]) throw PreconditionError("action contains a non-permutation");
      hit[x] = true;
    }
  }
  for (Element x = 0; x < n; ++x) {
    std::vector<bool> hit(n, false);
    for (const auto& p : perms) {
      if (hit[p[x]]) throw PreconditionError("action is not simply transitive at point " + std::to_string(x));
      hit[p[x]] = true;
    }
  }
  const std::set<std::vector<Element>> lines(g.lines.begin(), g.lines.end());
  for (const auto& p : perms)
    for (const auto& l : g.lines) {
      std::vector<Element> image;
      for (Element x : l) image.push_back(p[x]);
      std::sort(image.begin(), image.end());
      if (!lines.count(image)) return false;
    }
  return true;
}

HyperStructure hyperfield_from_incidence_group(const IncidenceGeometry& g,
                                               const std::vector<std::vector<Element>>& table,
                                               Element identity) {
  const std::size_t n = g.points;
  if (table.size() != n || identity >= n) throw PreconditionError("group table does not match the points");
  std::vector<std::vector<Element>> left(n, std::vector<Element>(n)), right = left;
  bool commutative = true;
  for (Element a = 0; a < n; ++a) {
    if (table[a].size() != n) throw PreconditionError("group table row has the wrong length");
    for (Element x = 0; x < n; ++x) {
      left[a][x] = table[a][x];
      right[a][x] = table[x][a];
      commutative = commutative && table[a][x] == table[x][a];
    }
  }
  if (!incidence_group_check(g, left)) throw PreconditionError("a left translation is not a collineation");
  if (!incidence_group_check(g, right)) throw PreconditionError("a right translation is not a collineation");
  HyperStructure additive = kvector_from_geometry(g);
  MulTable mul(n + 1);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) mul(a + 1, b + 1) = table[a][b] + 1;
  AddTable add = additive.add_table();
  try {
    return certify(HyperStructure(Carrier(n + 1, 0, identity + 1), std::move(add), std::move(mul), commutative),
                   Level::hyperfield);
  } catch (const ValidationFailure& f) {
    throw PreconditionError("group and geometry do not form a hyperfield: " + f.report().to_text());
  }
}

Partition Partition::from_classes(std::size_t n, const std::vector<std::vector<Element>>& classes) {
  constexpr Element kUnset = ~Element{0};
  Partition p;
  p.class_of.assign(n, kUnset);
  for (const auto& c : classes) {
    if (c.empty()) throw PreconditionError("empty class");
    const Element label = *std::min_element(c.begin(), c.end());
    for (Element x : c) {
      if (x >= n) throw PreconditionError("class member " + std::to_string(x) + " out of range");
      if (p.class_of[x] != kUnset) throw PreconditionError("element " + std::to_string(x) + " lies in two classes");
      p.class_of[x] = label;
    }
  }
  for (Element x = 0; x < n; ++x)
    if (p.class_of[x] == kUnset) throw PreconditionError("element " + std::to_string(x) + " lies in no class");
  return p;
}

std::vector<std::vector<Element>> Partition::classes() const {
  std::map<Element, std::vector<Element>> by_label;
  for (Element x = 0; x < class_of.size(); ++x) by_label[class_of[x]].push_back(x);
  std::vector<std::vector<Element>> out;
  for (auto& [label, members] : by_label) out.push_back(std::move(members));
  return out;
}

std::vector<Element> Partition::class_members(Element x) const {
  std::vector<Element> out;
  for (Element y = 0; y < class_of.size(); ++y)
    if (class_of[y] == class_of[x]) out.push_back(y);
  return out;
}

namespace {

Partition partition_from_sets(std::size_t n, const std::vector<Subset>& class_set) {
  Partition p;
  p.class_of.resize(n);
  for (Element x = 0; x < n; ++x) {
    p.class_of[x] = class_set[x].first();
    if (!(class_set[p.class_of[x]] == class_set[x]))
      throw InvariantViolation("relation is not an equivalence at element " + std::to_string(x));
  }
  return p;
}

}  // namespace

RelationFamily relation_family(const HyperStructure& e) {
  if (!e.is_kvector()) throw PreconditionError("relation_family needs a structure validated as a K-vector space");
  RelationFamily f;
  f.size = e.size();
  f.zero = e.zero();
  f.points = nonzero_elements(e);
  for (Element a : f.points) {
    std::vector<Subset> cls(f.size, Subset(f.size));
    for (Element x = 0; x < f.size; ++x) {
      if (x == f.zero || x == a) {
        cls[x] = Subset(f.size, {f.zero, a});
      } else {
        cls[x] = e.sum(x, a);
        cls[x].insert(x);
      }
    }
    f.relations.push_back(partition_from_sets(f.size, cls));
  }
  return f;
}

RelationFamily relation_family(const IncidenceGeometry& g) {
  const Incidence inc(g);
  if (!inc.all_pairs_unique()) throw PreconditionError("relation family needs a unique line through every pair of points");
  RelationFamily f;
  f.size = g.points + 1;
  f.zero = 0;
  for (Element p = 0; p < g.points; ++p) f.points.push_back(p + 1);
  for (Element a = 0; a < g.points; ++a) {
    std::vector<Subset> cls(f.size, Subset(f.size));
    cls[0] = cls[a + 1] = Subset(f.size, {0, a + 1});
    for (Element x = 0; x < g.points; ++x) {
      if (x == a) continue;
      for (Element p : g.lines[inc.line(a, x)])
        if (p != a) cls[x + 1].insert(p + 1);
    }
    f.relations.push_back(partition_from_sets(f.size, cls));
  }
  return f;
}

CommuteResult relations_commute(const RelationFamily& f, unsigned jobs) {
  const std::size_t m = f.relations.size();
  auto found = parallel_map<std::string>(m, jobs, [&](std::size_t i) -> std::string {
    for (std::size_t j = i + 1; j < m; ++j)
      if (auto x = composition_mismatch(f.relations[i], f.relations[j]))
        return "R_" + std::to_string(f.points[i]) + " and R_" + std::to_string(f.points[j]) + " differ in composition at " +
               std::to_string(*x);
    return {};
  });
  for (auto& s : found)
    if (!s.empty()) return CommuteResult{false, std::move(s)};
  return {};
}

IncidenceGeometry geometry_from_relations(const RelationFamily& f) {
  const std::size_t n = f.size;
  std::vector<Element> point_of(n, 0);
  for (Element i = 0; i < f.points.size(); ++i) point_of[f.points[i]] = i;
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    const Element a = f.points[i];
    const auto& r = f.relations[i];
    if (r.class_members(f.zero) != std::vector<Element>{std::min(f.zero, a), std::max(f.zero, a)})
      throw PreconditionError("{0," + std::to_string(a) + "} is not a class of R_" + std::to_string(a));
    for (const auto& c : r.classes())
      if (c.size() < 3 && !(c.size() == 2 && (c[0] == f.zero || c[1] == f.zero)))
        throw PreconditionError("R_" + std::to_string(a) + " has the class " + join(c) + " with fewer than 3 elements");
  }
  const auto commute = relations_commute(f);
  if (!commute.commute) throw PreconditionError("relations do not commute: " + commute.counterexample);

  std::set<std::vector<Element>> lines;
  for (std::size_t i = 0; i < f.points.size(); ++i)
    for (std::size_t j = i + 1; j < f.points.size(); ++j) {
      // Class of 0 under R_a o R_b is R_b({0, a}) = {0, b} u R_b(a).
      std::vector<Element> line;
      for (Element x : f.relations[j].class_members(f.zero)) line.push_back(x);
      for (Element x : f.relations[j].class_members(f.points[i])) line.push_back(x);
      std::vector<Element> pts;
      for (Element x : line)
        if (x != f.zero) pts.push_back(point_of[x]);
      std::sort(pts.begin(), pts.end());
      pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
      lines.insert(std::move(pts));
    }
  auto g = IncidenceGeometry::make(f.points.size(), {lines.begin(), lines.end()});
  const auto report = check_projective_axioms(g);
  if (!report.projective()) throw InvariantViolation("relations gave a geometry failing the axioms:\n" + report.to_text());
  return g;
}

RelationFamily conjugate_family(const MulTable& mul, Element zero, const Partition& s) {
  if (s.class_of.size() != mul.size()) throw PreconditionError("relation and table sizes differ");
  const Element one = find_identity(mul, zero);
  RelationFamily f;
  f.size = mul.size();
  f.zero = zero;
  for (Element a = 0; a < mul.size(); ++a) {
    if (a == zero) continue;
    f.points.push_back(a);
    f.relations.push_back(conjugate_relation(mul, one, s, a));
  }
  return f;
}

Partition canonical_relation(const HyperStructure& r) {
  if (!r.has_multiplication()) throw PreconditionError("canonical_relation needs a hyperring");
  const std::size_t n = r.size();
  const Element one = r.one(), zero = r.zero();
  if (!(r.sum(one, one) == Subset(n, {zero, one}))) throw PreconditionError("1 + 1 != {0, 1}: K is not contained");
  std::map<Subset, Element> label;
  Partition p;
  p.class_of.resize(n);
  for (Element x = 0; x < n; ++x) {
    Subset key = r.sum(x, one);
    key.insert(x);
    p.class_of[x] = label.emplace(std::move(key), x).first->second;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.related(x, y) != (x == y || r.sum_contains(y, one, x)))
        throw InvariantViolation("the two descriptions of the canonical relation differ at " + std::to_string(x) + "," +
                                 std::to_string(y));
  const auto unit = units_of(r.mul_table(), one);
  for (Element a = 0; a < n; ++a) {
    if (!unit[a]) continue;
    if (auto x = composition_mismatch(p, conjugate_relation(r.mul_table(), one, p, a)))
      throw InvariantViolation("canonical relation does not commute with its conjugate by " + std::to_string(a) +
                               " at " + std::to_string(*x));
  }
  return p;
}

HyperStructure rebuild_addition_from_relation(const MulTable& mul, Element zero, Element one, const Partition& s) {
  const std::size_t n = mul.size();
  if (s.class_of.size() != n) throw PreconditionError("relation and table sizes differ");
  check_abelian_monoid(mul, zero, one);
  if (s.class_members(one) != std::vector<Element>{std::min(zero, one), std::max(zero, one)})
    throw PreconditionError("{0,1} is not a class: class of 1 is " + join(s.class_members(one)));
  for (const auto& c : s.classes())
    if (!s.related(c[0], one) && c.size() < 3)
      throw PreconditionError("class " + join(c) + " has " + std::to_string(c.size()) + " elements, fewer than 3");
  for (Element a = 0; a < n; ++a) {
    if (a == zero) continue;
    if (auto x = composition_mismatch(s, conjugate_relation(mul, one, s, a)))
      throw PreconditionError("relation does not commute with its conjugate by " + std::to_string(a) + " at " +
                              std::to_string(*x));
  }
  std::vector<Subset> step(n, Subset(n));
  for (Element x = 0; x < n; ++x) {
    if (x == one) {
      step[x] = Subset(n, {zero, one});
      continue;
    }
    for (Element y : s.class_members(x))
      if (y != x) step[x].insert(y);
  }
  try {
    return certify(homogeneous_structure(mul, zero, one, step), Level::hyperfield);
  } catch (const ValidationFailure& f) {
    throw InvariantViolation("relation satisfying the rebuild conditions gave no hyperfield: " + f.report().to_text());
  }
}

std::optional<std::string> order_violation(const PartialOrder& order) {
  const std::size_t n = order.up.size();
  for (Element x = 0; x < n; ++x) {
    if (!order.leq(x, x)) return "not reflexive at " + std::to_string(x);
    for (Element y = 0; y < n; ++y) {
      if (x != y && order.leq(x, y) && order.leq(y, x))
        return "not antisymmetric: " + std::to_string(x) + " <= " + std::to_string(y) + " <= " + std::to_string(x);
      if (order.leq(x, y) && !order.up[y].is_subset_of(order.up[x]))
        return "not transitive above " + std::to_string(x) + " <= " + std::to_string(y);
    }
  }
  return std::nullopt;
}

std::optional<Element> sign_copy(const HyperStructure& r) {
  if (!r.satisfies(Level::hypergroup)) return std::nullopt;
  const std::size_t n = r.size();
  const Element one = r.one(), zero = r.zero(), m = r.neg(one);
  if (m == one) return std::nullopt;
  if (!(r.sum(one, one) == Subset(n, {one})) || !(r.sum(m, m) == Subset(n, {m})) ||
      !(r.sum(one, m) == Subset(n, {zero, one, m})))
    return std::nullopt;
  if (r.has_multiplication() && (r.mul(m, m) != one || r.mul(m, one) != m)) return std::nullopt;
  return m;
}

namespace {

// (T o T^a)(x) = T^a(T(x)) for the relation T(x) = up[x], T^a = a T a^-1.
std::optional<Element> order_conjugate_mismatch(const PartialOrder& order, const MulTable& mul, Element one, Element a) {
  const std::size_t n = order.up.size();
  const Element ainv = inverse_of(mul, one, a);
  std::vector<Subset> conj(n, Subset(n));
  for (Element x = 0; x < n; ++x) order.up[mul(ainv, x)].for_each([&](Element y) { conj[x].insert(mul(a, y)); });
  for (Element x = 0; x < n; ++x) {
    Subset lhs(n), rhs(n);
    order.up[x].for_each([&](Element y) { lhs |= conj[y]; });
    conj[x].for_each([&](Element y) { rhs |= order.up[y]; });
    if (!(lhs == rhs)) return x;
  }
  return std::nullopt;
}

}  // namespace

PartialOrder canonical_order(const HyperStructure& r) {
  const auto m = sign_copy(r);
  if (!m) throw PreconditionError("S is not contained: need 1 + 1 = {1}, -1 - 1 = {-1}, 1 - 1 = {-1, 0, 1}");
  const std::size_t n = r.size();
  const Element one = r.one();
  PartialOrder order;
  for (Element x = 0; x < n; ++x) {
    Subset up = r.sum(x, one);
    up.insert(x);
    order.up.push_back(std::move(up));
  }
  if (auto v = order_violation(order)) throw InvariantViolation("canonical order is not a partial order: " + *v);
  for (Element x = 0; x < n; ++x) {
    if (x == one || x == *m) continue;
    Subset strict = order.up[x];
    strict.erase(x);
    if (!(strict == r.sum(x, one)))
      throw InvariantViolation("x + 1 differs from the strict upper set at " + std::to_string(x));
  }
  if (r.has_multiplication()) {
    const auto unit = units_of(r.mul_table(), one);
    for (Element a = 0; a < n; ++a)
      if (unit[a])
        if (auto x = order_conjugate_mismatch(order, r.mul_table(), one, a))
          throw InvariantViolation("canonical order does not commute with its conjugate by " + std::to_string(a) + " at " +
                                   std::to_string(*x));
  }
  return order;
}

namespace {

std::vector<Subset> order_step(std::size_t n, Element zero, Element one, Element eps, const PartialOrder& order) {
  std::vector<Subset> s(n, Subset(n));
  for (Element x = 0; x < n; ++x) {
    if (x == eps) {
      s[x] = Subset(n, {eps, zero, one});
    } else if (x == zero || x == one) {
      s[x] = Subset(n, {one});
    } else {
      s[x] = order.up[x];
      s[x].erase(x);
    }
  }
  return s;
}

}  // namespace

std::optional<std::string> order_rebuild_violation(const MulTable& mul, Element zero, Element one, Element epsilon,
                                                   const PartialOrder& order) {
  const std::size_t n = mul.size();
  try {
    check_abelian_monoid(mul, zero, one);
  } catch (const PreconditionError& e) {
    return std::string(e.what());
  }
  if (order.up.size() != n) return "order and table sizes differ";
  if (epsilon >= n || epsilon == one || epsilon == zero || mul(epsilon, epsilon) != one)
    return "epsilon must be an element of order two";
  if (auto v = order_violation(order)) return *v;
  if (!(order.up[epsilon] == Subset(n, {epsilon, zero, one}))) return "S(epsilon) != {epsilon, 0, 1}";
  if (!(order.up[zero] == Subset(n, {zero, one}))) return "S(0) != {0, 1}";
  if (!(order.up[one] == Subset(n, {one}))) return "S(1) != {1}";
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (order.leq(x, y) != order.leq(mul(epsilon, y), mul(epsilon, x)))
        return "order reversal by epsilon fails at " + std::to_string(x) + "," + std::to_string(y);
  const auto s = order_step(n, zero, one, epsilon, order);
  for (Element x = 0; x < n; ++x)
    if (s[x].empty()) return "s(" + std::to_string(x) + ") is empty";
  for (Element a = 0; a < n; ++a) {
    if (a == zero) continue;
    const Element ainv = inverse_of(mul, one, a);
    std::vector<Subset> conj(n, Subset(n));
    for (Element y = 0; y < n; ++y) s[mul(ainv, y)].for_each([&](Element w) { conj[y].insert(mul(a, w)); });
    for (Element y = 0; y < n; ++y) {
      Subset lhs(n), rhs(n);
      s[y].for_each([&](Element w) { lhs |= conj[w]; });
      conj[y].for_each([&](Element w) { rhs |= s[w]; });
      if (!(lhs == rhs))
        return "s does not commute with its conjugate by " + std::to_string(a) + " at " + std::to_string(y);
    }
  }
  return std::nullopt;
}

HyperStructure rebuild_addition_from_order(const MulTable& mul, Element zero, Element one, Element epsilon,
                                           const PartialOrder& order) {
  if (auto v = order_rebuild_violation(mul, zero, one, epsilon, order)) throw PreconditionError(*v);
  const auto s = order_step(mul.size(), zero, one, epsilon, order);
  try {
    return certify(homogeneous_structure(mul, zero, one, s), Level::hyperfield);
  } catch (const ValidationFailure& f) {
    throw InvariantViolation("order satisfying the rebuild conditions gave no hyperfield: " + f.report().to_text());
  }
}

bool is_difference_set(const DifferenceSet& d) {
  const std::size_t n = d.modulus;
  if (n < 2 || d.residues.size() < 2) return false;
  std::vector<bool> in(n, false), hit(n, false);
  for (Element x : d.residues) {
    if (x >= n || in[x]) return false;
    in[x] = true;
  }
  for (Element x : d.residues)
    for (Element y : d.residues) {
      if (x == y) continue;
      const std::size_t diff = (x + n - y) % n;
      if (hit[diff]) return false;
      hit[diff] = true;
    }
  for (std::size_t r = 1; r < n; ++r)
    if (!hit[r]) return false;
  return true;
}

DifferenceSet canonical_difference_set(const DifferenceSet& d) {
  const std::size_t n = d.modulus;
  DifferenceSet best{n, {}};
  for (std::size_t t = 1; t < n; ++t) {
    if (std::gcd(t, n) != 1) continue;
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Element> image;
      for (Element x : d.residues) image.push_back(static_cast<Element>((t * x + s) % n));
      std::sort(image.begin(), image.end());
      if (best.residues.empty() || image < best.residues) best.residues = std::move(image);
    }
  }
  return best;
}

std::vector<DifferenceSet> difference_set_search(std::size_t n, std::size_t k, const Bounds& bounds) {
  if (n > bounds.difference_set_modulus)
    throw BoundError("modulus " + std::to_string(n) + " exceeds the bound " + std::to_string(bounds.difference_set_modulus));
  if (n < 3 || k < 2 || k * (k - 1) != n - 1) return {};
  // Some pair has difference 1; translate it to {0, 1} and extend upward.
  std::set<std::vector<Element>> classes;
  std::vector<Element> current{0, 1};
  std::vector<bool> used(n, false);
  used[1] = used[n - 1] = true;
  auto recurse = [&](auto&& self) -> void {
    if (current.size() == k) {
      classes.insert(canonical_difference_set(DifferenceSet{n, current}).residues);
      return;
    }
    for (Element c = current.back() + 1; c < n; ++c) {
      std::vector<std::size_t> added;
      bool ok = true;
      for (Element x : current) {
        const std::size_t d1 = (c + n - x) % n, d2 = n - d1;
        if (used[d1] || used[d2] || d1 == d2) {
          ok = false;
          break;
        }
        used[d1] = used[d2] = true;
        added.push_back(d1);
      }
      if (ok) {
        current.push_back(c);
        self(self);
        current.pop_back();
      }
      for (std::size_t d1 : added) used[d1] = used[n - d1] = false;
    }
  };
  recurse(recurse);
  std::vector<DifferenceSet> out;
  for (const auto& c : classes) out.push_back(DifferenceSet{n, c});
  return out;
}

CyclicPlane plane_from_difference_set(const DifferenceSet& d) {
  if (!is_difference_set(d)) throw PreconditionError("not a perfect difference set modulo " + std::to_string(d.modulus));
  const std::size_t n = d.modulus;
  std::vector<std::vector<Element>> lines;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<Element> l;
    for (Element x : d.residues) l.push_back(static_cast<Element>((x + s) % n));
    lines.push_back(std::move(l));
  }
  CyclicPlane plane{IncidenceGeometry::make(n, std::move(lines)), std::nullopt, {}};
  const auto report = check_projective_axioms(plane.geometry);
  if (!report.p3_strong.passed) {
    plane.refusal = "P3' fails: " + report.p3_strong.counterexample;
    return plane;
  }
  // H = Z/n written multiplicatively on carrier elements 1..n; classes
  // {0, 1} and (D - u) \ {0} for u in D.
  MulTable mul(n + 1);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) mul(a + 1, b + 1) = static_cast<Element>((a + b) % n + 1);
  std::vector<std::vector<Element>> classes{{0, 1}};
  for (Element u : d.residues) {
    std::vector<Element> c;
    for (Element x : d.residues)
      if (x != u) c.push_back(static_cast<Element>((x + n - u) % n + 1));
    classes.push_back(std::move(c));
  }
  plane.hyperfield = rebuild_addition_from_relation(mul, 0, 1, Partition::from_classes(n + 1, classes));
  return plane;
}

}  // namespace hyperforge
