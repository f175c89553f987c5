// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "hyperforge/io.hpp"
#include "tables.hpp"

using namespace hyperforge;

namespace {

struct Outcome {
  int code = -1;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string corpus(const std::string& name) { return std::string(HYPERFORGE_CORPUS_DIR) + "/" + name; }

std::string scratch(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("hyperforge_cli_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("corpus files validate at their claimed level") {
  for (const char* name : {"K.hr", "S.hr", "ex5.hr", "k_z5.hr"}) {
    CAPTURE(name);
    const Outcome o = run({"validate", corpus(name)});
    CHECK(o.code == 0);
    CHECK(contains(o.out, "level hyperfield: pass"));
  }
  CHECK(run({"validate", corpus("ex5.hr"), "--level", "hyperfield"}).code == 0);
  CHECK(run({"validate", corpus("ex5.hr"), "--level", "kvector"}).code == 0);
  const Outcome s = run({"validate", corpus("S.hr"), "--level", "kvector"});
  CHECK(s.code == 1);
  CHECK(contains(s.out, "FAIL"));
  const Outcome fano = run({"geometry", "axioms", corpus("fano.geom")});
  CHECK(fano.code == 0);
  CHECK(contains(fano.out, "dimension 2"));
  CHECK(run({"geometry", "axioms", "--strong", corpus("fano.geom")}).code == 1);
}

TEST_CASE("a mutated file fails validation with exit 1") {
  std::string text = read_text_file(corpus("ex5.hr"));
  text.replace(text.find("[[1], [0, 1]"), 12, "[[1], [1]   ");
  const Outcome o = run({"validate", scratch("mutant.hr", text)});
  CHECK(o.code == 1);
  CHECK(contains(o.out, "counterexample"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"validate", "/nonexistent/file.hr"}).code == 2);
  CHECK(run({"validate", corpus("K.hr"), "--level", "field"}).code == 2);
  CHECK(run({"--jobs", "0", "classify", "kext", "--n", "4"}).code == 2);
  CHECK(run({"build", "quotient", "--ring", "Q/5", "--base", "5"}).code == 2);
  CHECK(run({"build", "quotient", "--ring", "F9"}).code == 2);
  CHECK(run({"classify", "kext", "--n", "12"}).code == 2);  // above the default bound
  const std::string text = read_text_file(corpus("ex5.hr"));
  const Outcome truncated = run({"validate", scratch("truncated.hr", text.substr(0, text.size() / 2))});
  CHECK(truncated.code == 2);
  CHECK(contains(truncated.err, "line"));
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("build emits parseable documents") {
  const Outcome k = run({"build", "kras"});
  REQUIRE(k.code == 0);
  CHECK(k.out == read_text_file(corpus("K.hr")));
  CHECK(run({"build", "sign"}).out == read_text_file(corpus("S.hr")));

  const Outcome q = run({"build", "quotient", "--ring", "F_9", "--base", "3"});
  REQUIRE(q.code == 0);
  const HyperStructure h = certify(parse_structure_file(q.out), Level::hyperfield);
  CHECK(is_isomorphic(h, certify(testdata::ex5(), Level::hyperfield)).has_value());

  const Outcome by_order = run({"build", "quotient", "--ring", "F9", "--order", "2"});
  CHECK(by_order.out == q.out);
  const Outcome by_gens = run({"build", "quotient", "--ring", "F9", "--gens", "2"});
  CHECK(by_gens.out == q.out);

  const Outcome product = run({"build", "product", "--fields", "3,3"});
  REQUIRE(product.code == 0);
  CHECK(parse_structure_file(product.out).size() == 5);

  const std::string path = scratch("fieldq.hr", "");
  CHECK(run({"build", "fieldq", "--q", "3", "--m", "3", "-o", path}).code == 0);
  CHECK(parse_structure_file(read_text_file(path)).size() == 14);
  CHECK(run({"build", "lyndon", "--group", "Z/2xZ/2", "--variant", "nilpotent"}).code == 0);
  CHECK(run({"build", "lyndon", "--group", "Z/3"}).code == 2);
}

TEST_CASE("documented examples") {
  const Outcome kext = run({"classify", "kext", "--n", "4"});
  CHECK(kext.code == 0);
  CHECK(contains(kext.out, "0 structures"));

  const Outcome diff = run({"geometry", "diffset", "--n", "13", "--k", "4"});
  CHECK(diff.code == 0);
  CHECK(contains(diff.out, "{0,1,3,9}"));
  CHECK(contains(diff.out, "hyperfield on 14 elements"));

  const Outcome fano = run({"geometry", "diffset", "--n", "7", "--k", "3", "--lines"});
  CHECK(contains(fano.out, "no hyperfield: P3'"));
  CHECK(parse_geometry(fano.out.substr(fano.out.find("\npoints ") + 1)) == parse_geometry(read_text_file(corpus("fano.geom"))));
}

TEST_CASE("structure commands") {
  const Outcome spec = run({"spec", corpus("ex5.hr")});
  CHECK(spec.code == 0);
  CHECK(contains(spec.out, "1 prime, each matched"));

  const Outcome homs = run({"homs", "fieldq:3:2", "fieldq:3:2", "--lift"});
  CHECK(homs.code == 0);
  CHECK(contains(homs.out, "homomorphisms"));

  const Outcome geo = run({"geometry", "of", corpus("k_z5.hr")});
  CHECK(geo.code == 0);
  CHECK(parse_geometry(geo.out).lines.size() == 1);
  CHECK(run({"geometry", "of", corpus("S.hr")}).code == 1);

  CHECK(run({"geometry", "relations", corpus("ex5.hr")}).code == 0);
  CHECK(contains(run({"geometry", "relations", corpus("fano.geom")}).out, "pairwise commuting"));
  CHECK(contains(run({"geometry", "desargues", "fieldq:3:3"}).out, "desarguesian: yes"));

  CHECK(run({"geometry", "rebuild", corpus("ex5.hr")}).code == 0);
  CHECK(run({"geometry", "rebuild", "S"}).code == 0);
  CHECK(run({"geometry", "rebuild", "fieldq:3:3"}).code == 0);

  const Outcome dim2 = run({"classify", "dim2", "lyndon:Z/4:nilpotent"});
  CHECK(dim2.code == 0);
  CHECK(contains(dim2.out, "variant nilpotent"));

  CHECK(contains(run({"classify", "sext", "--n", "5"}).out, "0 structures"));
  CHECK(contains(run({"--bound", "10", "classify", "kext", "--n", "10"}).out, "n=10"));
}

TEST_CASE("sandbox commands") {
  const Outcome build = run({"sandbox", "build", "--q", "3", "--residues", "3,9"});
  CHECK(build.code == 0);
  CHECK(contains(build.out, "|R|=27"));
  const Outcome ideals = run({"sandbox", "ideals", "--q", "3", "--residues", "3,9"});
  CHECK(contains(ideals.out, "4 ideals"));
  CHECK(contains(run({"sandbox", "primes", "--q", "3", "--residues", "3,9"}).out, "2 prime ideals"));
  const Outcome g = run({"sandbox", "groupoid", "--q", "3", "--residues", "3,9,9"});
  CHECK(g.code == 0);
  CHECK(contains(g.out, "remove place 2"));
  CHECK(run({"sandbox", "build", "--q", "2", "--residues", "2,4"}).code == 2);
}

TEST_CASE("bound override through the environment") {
  ::setenv("HYPERFORGE_BOUND", "8", 1);
  CHECK(run({"build", "quotient", "--ring", "F9", "--base", "3"}).code == 2);
  ::setenv("HYPERFORGE_BOUND", "many", 1);
  CHECK(run({"build", "kras"}).code == 2);
  ::unsetenv("HYPERFORGE_BOUND");
  CHECK(run({"build", "quotient", "--ring", "F9", "--base", "3"}).code == 0);
  CHECK(run({"--bound", "8", "build", "quotient", "--ring", "F9", "--base", "3"}).code == 2);
}

TEST_CASE("output does not depend on --jobs") {
  const std::vector<std::vector<std::string>> commands = {
      {"classify", "kext", "--n", "8"},
      {"classify", "sext", "--n", "7"},
      {"spec", "fieldq:3:2"},
      {"homs", "fieldq:4:2", "fieldq:4:2", "--lift"},
      {"geometry", "axioms", "fieldq:3:3"},
      {"geometry", "desargues", "fieldq:3:3"},
      {"geometry", "relations", corpus("fano.geom")},
      {"sandbox", "groupoid", "--q", "3", "--residues", "3,9"},
  };
  for (auto args : commands) {
    CAPTURE(args.front());
    auto one = args, eight = args;
    one.insert(one.begin(), {"--jobs", "1"});
    eight.insert(eight.begin(), {"--jobs", "8"});
    const Outcome a = run(one), b = run(eight);
    CHECK(a.code == 0);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
