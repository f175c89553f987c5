// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperforge/reports.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace hyperforge {

std::string format_elements(const std::vector<Element>& xs) { return fmt::format("{{{}}}", fmt::join(xs, ",")); }

std::string structure_report(const HyperStructure& r) {
  std::string out = fmt::format("size {} zero {} one {} level {}{}{}\n", r.size(), r.zero(), r.one(),
                                to_string(r.level()), r.is_kvector() ? " kvector" : "",
                                r.certified_by_construction() ? " (by construction)" : "");
  if (r.size() > 32) return out + "addition table omitted (more than 32 elements)\n";
  for (Element a = 0; a < r.size(); ++a) {
    out += fmt::format("{:>3} |", a);
    for (Element b = 0; b < r.size(); ++b) out += " " + r.sum(a, b).to_string();
    out += '\n';
  }
  return out;
}

std::string ideals_report(const std::vector<HyperIdeal>& ideals) {
  std::string out = fmt::format("{} ideals\n", ideals.size());
  for (const auto& i : ideals) out += "  " + i.members.to_string() + "\n";
  return out;
}

std::string spec_report(const std::vector<SpecPoint>& points) {
  std::string out = fmt::format("{} prime{}, each matched with one hom to K\n", points.size(),
                                points.size() == 1 ? "" : "s");
  for (const auto& p : points)
    out += fmt::format("  prime {}  hom {}\n", p.prime.members.to_string(), format_elements(p.hom));
  return out;
}

std::string homs_report(const HomEnumeration& homs) {
  std::string out = fmt::format("{} homomorphisms{} ({} nodes)\n", homs.homs.size(),
                                homs.complete ? "" : " (partial: budget exhausted)", homs.nodes);
  for (const auto& h : homs.homs)
    out += fmt::format("  {}{}{}\n", format_elements(h.map), h.is_epi ? " epi" : "", h.is_iso ? " iso" : "");
  return out;
}

std::string lift_report(const HomWitness& h, const LiftResult& lift) {
  std::string out = fmt::format("hom {} range dimension {}: ", format_elements(h.map), lift.range_dimension);
  if (lift.kind == LiftResult::Kind::line_ranged) return out + "line-ranged, no lift required\n";
  return out + fmt::format("unique ring lift {} ({} embeddings, {} candidates)\n", format_elements(lift.ring_map),
                           lift.embeddings, lift.candidates);
}

std::string relation_family_report(const RelationFamily& f, const CommuteResult& commute) {
  std::string out = fmt::format("{} relations on {} elements; {}\n", f.relations.size(), f.size,
                                commute.commute ? "pairwise commuting" : "not commuting: " + commute.counterexample);
  for (std::size_t i = 0; i < f.relations.size(); ++i) {
    out += fmt::format("  R_{}:", f.points[i]);
    for (const auto& c : f.relations[i].classes()) out += " " + format_elements(c);
    out += '\n';
  }
  return out;
}

std::string desargues_report(const DesarguesResult& d) {
  std::string out = fmt::format("desarguesian: {} ({} perspective pairs)\n", to_string(d.verdict), d.configurations);
  if (!d.counterexample.empty()) out += "  counterexample: " + d.counterexample + "\n";
  return out;
}

std::string difference_sets_report(std::size_t n, std::size_t k, const std::vector<DifferenceSet>& sets) {
  std::string out = fmt::format("({},{}): {} equivalence class{}\n", n, k, sets.size(), sets.size() == 1 ? "" : "es");
  for (const auto& d : sets) out += "  " + format_elements(d.residues) + "\n";
  return out;
}

std::string dimension2_report(const Dimension2Class& c) {
  return fmt::format("variant {} over H = {}\n  isomorphism {}\n", to_string(c.variant), c.group.to_string(),
                     format_elements(c.witness));
}

std::string place_ideals_report(const SemiLocalClassSpace& s, const std::vector<PlaceIdeal>& ideals) {
  std::string out = fmt::format("{} ideals over {} places\n", ideals.size(), s.places.degrees.size());
  for (const auto& i : ideals) {
    std::vector<std::size_t> z;
    for (std::size_t v = 0; v < s.places.degrees.size(); ++v)
      if ((i.places >> v) & 1U) z.push_back(v);
    out += fmt::format("  Z = {{{}}}: {} classes\n", fmt::join(z, ","), i.ideal.size());
  }
  return out;
}

std::string place_primes_report(const std::vector<SpecEntry>& primes) {
  std::string out = fmt::format("{} prime ideals\n", primes.size());
  for (const auto& p : primes) out += fmt::format("  p_{}: {} classes\n", p.place, p.prime.size());
  return out;
}

}  // namespace hyperforge
