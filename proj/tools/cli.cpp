// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hyperforge/adele_sandbox.hpp"
#include "hyperforge/classification.hpp"
#include "hyperforge/constructions.hpp"
#include "hyperforge/core.hpp"
#include "hyperforge/geometry.hpp"
#include "hyperforge/homomorphisms.hpp"
#include "hyperforge/ideals.hpp"
#include "hyperforge/io.hpp"
#include "hyperforge/reports.hpp"
#include "hyperforge/ring.hpp"

namespace hyperforge::cli {
namespace {

struct Options {
  unsigned jobs = 1;
  std::optional<std::size_t> bound;
  std::string output;

  std::string file, file2;
  std::string level;
  bool strong = false, lift = false, lines = false;
  std::size_t budget = std::size_t{1} << 22;

  std::string ring, group, variant = "plain";
  std::vector<std::size_t> gens, fields, residues;
  std::size_t base = 0, order = 0, index = 0, q = 0, m = 0, n = 0, k = 0;
};

struct Loaded {
  HyperStructure structure;
  std::optional<QuotientStructure> quotient;
  std::optional<Level> claimed;
};

// Highest level the structure passes: hyperfield, hyperring, hypergroup or raw.
HyperStructure certify_best(HyperStructure r) {
  for (Level l : {Level::hyperfield, Level::hyperring, Level::hypergroup})
    if (validate(r, l).passed()) return certify(std::move(r), l);
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);) parts.push_back(part);
  return parts;
}

std::size_t to_size(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw PreconditionError("bad " + what + " '" + s + "'");
  return static_cast<std::size_t>(v);
}

LyndonVariant variant_from(const std::string& name) {
  for (LyndonVariant v : {LyndonVariant::plain, LyndonVariant::nilpotent, LyndonVariant::idempotent_pair})
    if (to_string(v) == name) return v;
  throw PreconditionError("unknown variant '" + name + "' (plain, nilpotent, idempotent_pair)");
}

// "K", "S", "fieldq:q:m", "lyndon:GROUP[:variant]" or a `.hr` path.
Loaded load(const std::string& ref, const Bounds& bounds) {
  if (ref == "K") return {builtin(Builtin::K), std::nullopt, Level::hyperfield};
  if (ref == "S") return {builtin(Builtin::S), std::nullopt, Level::hyperfield};
  const auto parts = split(ref, ':');
  if (parts.size() == 3 && parts[0] == "fieldq") {
    QuotientStructure q = field_quotient(to_size(parts[1], "q"), to_size(parts[2], "m"), bounds);
    HyperStructure s = q.structure;
    return {std::move(s), std::move(q), Level::hyperfield};
  }
  if ((parts.size() == 2 || parts.size() == 3) && parts[0] == "lyndon") {
    const LyndonVariant v = parts.size() == 3 ? variant_from(parts[2]) : LyndonVariant::plain;
    return {lyndon_extension(AbelianGroupSpec::parse(parts[1]), v), std::nullopt, std::nullopt};
  }
  const StructureDocument doc = parse_structure_document(read_text_file(ref));
  return {certify_best(to_structure(doc)), std::nullopt, doc.level};
}

bool is_geometry_file(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".geom") == 0;
}

HyperStructure require(HyperStructure r, Level level) {
  if (level == Level::kvector ? r.is_kvector() : r.satisfies(level)) return r;
  throw ValidationFailure(validate(r, level));
}

IncidenceGeometry load_geometry(const std::string& ref, const Bounds& bounds) {
  if (is_geometry_file(ref)) return parse_geometry(read_text_file(ref));
  return geometry_of(require(load(ref, bounds).structure, Level::kvector));
}

FiniteRing parse_ring(const std::string& spec, const Bounds& bounds) {
  std::vector<FiniteRing> factors;
  for (std::string part : split(spec, 'x')) {
    part.erase(std::remove(part.begin(), part.end(), ' '), part.end());
    if (part.rfind("Z/", 0) == 0) {
      factors.push_back(zmod(to_size(part.substr(2), "modulus"), bounds));
    } else if (part.rfind("F_", 0) == 0) {
      factors.push_back(finite_field(to_size(part.substr(2), "field order"), bounds));
    } else if (part.rfind("F", 0) == 0) {
      factors.push_back(finite_field(to_size(part.substr(1), "field order"), bounds));
    } else {
      throw PreconditionError("bad ring factor '" + part + "' (use Z/n or F_q, joined by x)");
    }
  }
  if (factors.empty()) throw PreconditionError("empty ring specification");
  if (factors.size() == 1) return std::move(factors.front());
  FiniteRing r = FiniteRing::product(factors);
  if (r.size() > bounds.ring_size)
    throw BoundError("ring of size " + std::to_string(r.size()) + " exceeds bound " + std::to_string(bounds.ring_size));
  return r;
}

UnitSubgroup choose_subgroup(const FiniteRing& ring, const Options& o) {
  const int chosen = int(!o.gens.empty()) + int(o.base != 0) + int(o.order != 0);
  if (chosen != 1) throw PreconditionError("give exactly one of --gens, --base, --order");
  if (!o.gens.empty()) {
    std::vector<Element> g(o.gens.begin(), o.gens.end());
    return UnitSubgroup::generated(ring, g);
  }
  if (o.base != 0) return embedded_base_units(ring, o.base);
  std::vector<UnitSubgroup> matching;
  for (auto& g : unit_subgroups(ring))
    if (g.order() == o.order) matching.push_back(std::move(g));
  if (o.index >= matching.size())
    throw PreconditionError("ring has " + std::to_string(matching.size()) + " unit subgroups of order " +
                            std::to_string(o.order) + "; --index " + std::to_string(o.index) + " is out of range");
  return matching[o.index];
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error("cannot write '" + path + "'");
}

std::optional<Level> emitted_level(const HyperStructure& r) {
  if (r.level() != Level::raw) return r.level();
  return std::nullopt;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}
  int run(const std::vector<std::string>& args);

 private:
  Bounds bounds(std::size_t Bounds::*field = nullptr) const {
    Bounds b = default_bounds();
    if (o_.bound && field != nullptr) b.*field = *o_.bound;
    return b;
  }

  int validate_cmd();
  int build_cmd(const std::string& what);
  int spec_cmd();
  int homs_cmd();
  int geometry_cmd(const std::string& what);
  int classify_cmd(const std::string& what);
  int sandbox_cmd(const std::string& what);

  std::ostream& out_;
  std::ostream& err_;
  Options o_;
};

int Runner::validate_cmd() {
  const StructureDocument doc = parse_structure_document(read_text_file(o_.file));
  Level level = doc.level.value_or(Level::hyperfield);
  if (!o_.level.empty()) {
    const auto l = level_from_string(o_.level);
    if (!l) throw PreconditionError("unknown level '" + o_.level + "'");
    level = *l;
  }
  const ValidationReport report = validate(to_structure(doc), level);
  out_ << report.to_text();
  return report.passed() ? kExitOk : kExitDisagree;
}

int Runner::build_cmd(const std::string& what) {
  const Bounds b = bounds(&Bounds::ring_size);
  HyperStructure r = builtin(Builtin::K);
  if (what == "sign") {
    r = builtin(Builtin::S);
  } else if (what == "quotient") {
    const FiniteRing ring = parse_ring(o_.ring, b);
    r = quotient_by_subgroup(ring, choose_subgroup(ring, o_), b).structure;
  } else if (what == "product") {
    if (o_.fields.empty()) throw PreconditionError("--fields is required");
    const FiniteRing ring = product_of_fields(o_.fields, b);
    std::size_t base = o_.base;
    if (base == 0) base = prime_power(o_.fields.front()).first;
    r = quotient_by_subgroup(ring, embedded_base_units(ring, base), b).structure;
  } else if (what == "lyndon") {
    r = lyndon_extension(AbelianGroupSpec::parse(o_.group), variant_from(o_.variant));
  } else if (what == "fieldq") {
    r = field_quotient(o_.q, o_.m, b).structure;
  }
  write_output(emit_structure(r, emitted_level(r)), o_.output, out_);
  return kExitOk;
}

int Runner::spec_cmd() {
  const Bounds b = bounds(&Bounds::ring_size);
  const HyperStructure r = require(load(o_.file, b).structure, Level::hyperring);
  out_ << spec_report(spec_hom_bijection(r, b, o_.jobs));
  return kExitOk;
}

int Runner::homs_cmd() {
  const Bounds b = bounds(&Bounds::ring_size);
  Loaded src = load(o_.file, b);
  Loaded tgt = load(o_.file2, b);
  src.structure = require(std::move(src.structure), Level::hyperring);
  tgt.structure = require(std::move(tgt.structure), Level::hyperring);
  const HomEnumeration homs = enumerate_homs(src.structure, tgt.structure, o_.budget, o_.jobs);
  out_ << homs_report(homs);
  if (o_.lift) {
    if (!src.quotient || !tgt.quotient) throw PreconditionError("--lift needs fieldq:q:m source and target");
    for (const auto& h : homs.homs) out_ << lift_report(h, lift_hom(h, *src.quotient, *tgt.quotient));
  }
  if (!homs.complete) {
    err_ << "search budget exhausted; raise --budget\n";
    return kExitUsage;
  }
  return kExitOk;
}

int Runner::geometry_cmd(const std::string& what) {
  const Bounds b = bounds(&Bounds::ring_size);
  if (what == "of") {
    const HyperStructure r = require(load(o_.file, b).structure, Level::kvector);
    write_output(emit_geometry(geometry_of(r)), o_.output, out_);
    return kExitOk;
  }
  if (what == "axioms") {
    const IncidenceGeometry g = load_geometry(o_.file, b);
    const GeometryReport report = check_projective_axioms(g, o_.jobs);
    out_ << "points " << g.points << " lines " << g.lines.size() << '\n' << report.to_text();
    const bool ok = report.p1.passed && report.p2.passed && report.p3.passed && (!o_.strong || report.p3_strong.passed);
    if (report.p1.passed && report.p2.passed) out_ << "dimension " << geometry_dimension(g) << '\n';
    return ok ? kExitOk : kExitDisagree;
  }
  if (what == "desargues") {
    out_ << desargues_report(is_desarguesian(load_geometry(o_.file, b), o_.jobs));
    return kExitOk;
  }
  if (what == "relations") {
    const RelationFamily f = is_geometry_file(o_.file)
                                 ? relation_family(parse_geometry(read_text_file(o_.file)))
                                 : relation_family(require(load(o_.file, b).structure, Level::kvector));
    out_ << relation_family_report(f, relations_commute(f, o_.jobs));
    return kExitOk;
  }
  if (what == "rebuild") {
    const HyperStructure r = require(load(o_.file, b).structure, Level::hyperfield);
    std::optional<HyperStructure> rebuilt;
    try {
      if (r.sum(r.one(), r.one()) == Subset(r.size(), {r.zero(), r.one()})) {
        out_ << "encoding: relation (1 + 1 = {0,1})\n";
        rebuilt = rebuild_addition_from_relation(r.mul_table(), r.zero(), r.one(), canonical_relation(r));
      } else if (const auto eps = sign_copy(r)) {
        out_ << "encoding: order (sign hyperfield inside, epsilon " << *eps << ")\n";
        rebuilt = rebuild_addition_from_order(r.mul_table(), r.zero(), r.one(), *eps, canonical_order(r));
      } else {
        throw PreconditionError("structure contains neither K nor S");
      }
    } catch (const PreconditionError& e) {
      out_ << "rebuild refused: " << e.what() << '\n';
      return kExitDisagree;
    }
    for (Element x = 0; x < r.size(); ++x)
      for (Element y = 0; y < r.size(); ++y)
        if (rebuilt->sum(x, y) != r.sum(x, y)) {
          out_ << "rebuilt addition differs at " << x << " + " << y << ": " << rebuilt->sum(x, y).to_string()
               << " vs " << r.sum(x, y).to_string() << '\n';
          return kExitDisagree;
        }
    out_ << "rebuilt addition matches on all " << r.size() * r.size() << " sums\n";
    return kExitOk;
  }
  // diffset
  const auto sets = difference_set_search(o_.n, o_.k, bounds(&Bounds::difference_set_modulus));
  out_ << difference_sets_report(o_.n, o_.k, sets);
  for (const auto& d : sets) {
    const CyclicPlane plane = plane_from_difference_set(d);
    out_ << format_elements(d.residues) << ": " << plane.geometry.points << " points, " << plane.geometry.lines.size()
         << " lines; ";
    if (plane.hyperfield) {
      out_ << "hyperfield on " << plane.hyperfield->size() << " elements\n";
    } else {
      out_ << "no hyperfield: " << plane.refusal << '\n';
    }
    if (o_.lines) out_ << emit_geometry(plane.geometry);
  }
  return kExitOk;
}

int Runner::classify_cmd(const std::string& what) {
  if (what == "kext") {
    out_ << classification_table(o_.n, enumerate_K_extensions(o_.n, bounds(&Bounds::k_extension_size), o_.jobs));
  } else if (what == "sext") {
    out_ << classification_table(o_.n, enumerate_S_extensions(o_.n, bounds(&Bounds::s_extension_size), o_.jobs));
  } else {
    out_ << dimension2_report(classify_dimension2(load(o_.file, bounds(&Bounds::ring_size)).structure, o_.jobs));
  }
  return kExitOk;
}

int Runner::sandbox_cmd(const std::string& what) {
  const Bounds b = bounds(&Bounds::sandbox_ring_size);
  const SemiLocalClassSpace s = build_semilocal(PlaceSystem::from_residues(o_.q, o_.residues), b);
  if (what == "build") {
    out_ << "q=" << s.places.q << " |R|=" << s.ring().size() << " |G|=" << s.quotient.subgroup.order()
         << " |H|=" << s.h().size() << '\n';
    out_ << structure_report(s.h());
    return kExitOk;
  }
  if (what == "ideals") {
    out_ << place_ideals_report(s, classify_ideals(s, o_.jobs));
    return kExitOk;
  }
  if (what == "primes") {
    out_ << place_primes_report(prime_spectrum(s, o_.jobs));
    out_ << sandbox_report(s, prime_elements(s, o_.jobs));
    return kExitOk;
  }
  const PrimeGroupoid p = prime_elements(s, o_.jobs);
  out_ << sandbox_report(s, p);
  bool ok = true;
  const GroupoidReport laws = check_groupoid_laws(s, p, o_.jobs);
  out_ << "groupoid laws: " << laws.to_text();
  ok = ok && laws.passed();
  if (s.places.degrees.size() >= 2) {
    for (std::size_t v = 0; v < s.places.degrees.size(); ++v) {
      const GroupoidReport r = check_place_removal(s, p, v, b);
      out_ << "remove place " << v << ": " << r.to_text();
      ok = ok && r.passed();
    }
  }
  return ok ? kExitOk : kExitDisagree;
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Finite hyperrings, hyperfields and their geometries", "hyperforge"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", o_.jobs, "worker threads (output does not depend on it)")
      ->check(CLI::Range(1U, 256U));
  app.add_option("--bound", o_.bound,
                 "size bound of the command: ring size, extension size, difference-set modulus or sandbox ring size");

  auto* validate = app.add_subcommand("validate", "check a .hr file against a level");
  validate->add_option("file", o_.file)->required();
  validate->add_option("--level", o_.level, "raw, hypergroup, kvector, hyperring or hyperfield");

  auto* build = app.add_subcommand("build", "emit a .hr structure");
  build->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> builds;
  for (auto [name, about] : {std::pair{"kras", "the Krasner hyperfield K"}, {"sign", "the sign hyperfield S"},
                             {"quotient", "R/G for a unit subgroup G"}, {"lyndon", "K-extension of an abelian group"},
                             {"fieldq", "F_{q^m}/F_q^x"}, {"product", "diagonal quotient of a product of fields"}}) {
    auto* sub = build->add_subcommand(name, about);
    sub->add_option("-o,--output", o_.output, "output path (default stdout)");
    builds.emplace_back(name, sub);
  }
  builds[2].second->add_option("--ring", o_.ring, "Z/n or F_q factors joined by x")->required();
  builds[2].second->add_option("--gens", o_.gens, "generators of G")->delimiter(',');
  builds[2].second->add_option("--base", o_.base, "G = image of F_base^x");
  builds[2].second->add_option("--order", o_.order, "G = unit subgroup of this order");
  builds[2].second->add_option("--index", o_.index, "which subgroup of that order");
  builds[3].second->add_option("--group", o_.group, "abelian group, e.g. Z/4 or 2x2")->required();
  builds[3].second->add_option("--variant", o_.variant, "plain, nilpotent or idempotent_pair");
  builds[4].second->add_option("--q", o_.q)->required();
  builds[4].second->add_option("--m", o_.m)->required();
  builds[5].second->add_option("--fields", o_.fields, "field orders")->delimiter(',')->required();
  builds[5].second->add_option("--base", o_.base, "diagonal subfield order (default: the prime)");

  auto* spec = app.add_subcommand("spec", "prime spectrum matched with homs to K");
  spec->add_option("structure", o_.file, "file, K, S, fieldq:q:m or lyndon:H")->required();

  auto* homs = app.add_subcommand("homs", "enumerate homomorphisms");
  homs->add_option("source", o_.file)->required();
  homs->add_option("target", o_.file2)->required();
  homs->add_option("--budget", o_.budget, "node budget per top-level branch");
  homs->add_flag("--lift", o_.lift, "lift each hom to a ring map (fieldq sources and targets)");

  auto* geometry = app.add_subcommand("geometry", "projective geometry tools");
  geometry->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> geos;
  for (auto [name, about] : {std::pair{"of", "lines of a K-vector space"}, {"axioms", "projective-space axioms"},
                             {"desargues", "check Desargues' property"}, {"relations", "point relations R_p"},
                             {"rebuild", "rebuild the structure from its geometry"},
                             {"diffset", "cyclic difference sets and their planes"}})
    geos.emplace_back(name, geometry->add_subcommand(name, about));
  for (std::size_t i = 0; i < 5; ++i) geos[i].second->add_option("input", o_.file, ".hr, .geom or a builtin")->required();
  geos[0].second->add_option("-o,--output", o_.output);
  geos[1].second->add_flag("--strong", o_.strong, "also require four points per line");
  geos[5].second->add_option("--n", o_.n)->required();
  geos[5].second->add_option("--k", o_.k)->required();
  geos[5].second->add_flag("--lines", o_.lines, "print the lines of each plane");

  auto* classify = app.add_subcommand("classify", "small hyperfield extensions");
  classify->require_subcommand(1);
  auto* kext = classify->add_subcommand("kext", "extensions of K with n elements");
  kext->add_option("--n", o_.n)->required();
  auto* sext = classify->add_subcommand("sext", "extensions of S with n elements");
  sext->add_option("--n", o_.n)->required();
  auto* dim2 = classify->add_subcommand("dim2", "identify a dimension-2 extension of K");
  dim2->add_option("structure", o_.file)->required();

  auto* sandbox = app.add_subcommand("sandbox", "semi-local class space of a product of fields");
  sandbox->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> sands;
  for (auto [name, about] : {std::pair{"build", "class-space summary"}, {"ideals", "ideals indexed by place sets"},
                             {"primes", "prime ideals, one per place"}, {"groupoid", "place-removal morphisms"}}) {
    auto* sub = sandbox->add_subcommand(name, about);
    sub->add_option("--q", o_.q, "base field order")->required();
    sub->add_option("--residues", o_.residues, "residue field orders")->delimiter(',')->required();
    sands.emplace_back(name, sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto chosen = [](const std::vector<std::pair<std::string, CLI::App*>>& subs) {
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) return name;
    return std::string();
  };

  try {
    if (validate->parsed()) return validate_cmd();
    if (build->parsed()) return build_cmd(chosen(builds));
    if (spec->parsed()) return spec_cmd();
    if (homs->parsed()) return homs_cmd();
    if (geometry->parsed()) return geometry_cmd(chosen(geos));
    if (classify->parsed()) return classify_cmd(kext->parsed() ? "kext" : sext->parsed() ? "sext" : "dim2");
    if (sandbox->parsed()) return sandbox_cmd(chosen(sands));
  } catch (const ValidationFailure& e) {
    out_ << e.report().to_text();
    err_ << "structure fails the required level\n";
    return kExitDisagree;
  } catch (const InvariantViolation& e) {
    err_ << "invariant violated: " << e.what() << '\n';
    return kExitDisagree;
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace hyperforge::cli
