// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <string>

#include "doctest.h"
#include "hyperforge/constructions.hpp"
#include "hyperforge/io.hpp"
#include "tables.hpp"

using namespace hyperforge;

namespace {

std::string corpus(const std::string& name) { return read_text_file(std::string(HYPERFORGE_CORPUS_DIR) + "/" + name); }

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

ParseError parse_failure(const std::string& text) {
  try {
    parse_structure_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("document parsed: " << text);
  return ParseError("", 0, 0);
}

ParseError geometry_failure(const std::string& text) {
  try {
    parse_geometry(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("geometry parsed: " << text);
  return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("corpus structure files round-trip byte for byte") {
  for (const char* name : {"K.hr", "S.hr", "ex5.hr", "k_z5.hr"}) {
    CAPTURE(name);
    const std::string text = corpus(name);
    CHECK(emit_structure_document(parse_structure_document(text)) == text);
  }
}

TEST_CASE("corpus files hold the hand-transcribed tables") {
  CHECK(same_tables(parse_structure_file(corpus("K.hr")), testdata::krasner()));
  CHECK(same_tables(parse_structure_file(corpus("S.hr")), testdata::sign()));
  CHECK(same_tables(parse_structure_file(corpus("ex5.hr")), testdata::ex5()));
  const HyperStructure kz5 = certify(parse_structure_file(corpus("k_z5.hr")), Level::hyperfield);
  CHECK(kz5.size() == 6);
  CHECK(is_isomorphic(kz5, lyndon_extension(AbelianGroupSpec{{5}}, LyndonVariant::plain)).has_value());
}

TEST_CASE("emit and parse are inverse on random tables") {
  std::mt19937 rng(20261016);
  for (std::size_t n : {2U, 3U, 5U, 9U, 17U}) {
    std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
    std::vector<std::vector<std::vector<Element>>> add(n, std::vector<std::vector<Element>>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        mul[a][b] = static_cast<Element>(rng() % n);
        for (Element c = 0; c < n; ++c)
          if (rng() % 3 == 0) add[a][b].push_back(c);
      }
    const HyperStructure r(Carrier(n), AddTable::from_lists(add), MulTable::from_rows(mul));
    const std::string text = emit_structure(r);
    const HyperStructure back = parse_structure_file(text);
    CHECK(same_tables(back, r));
    CHECK(emit_structure(back) == text);
  }
}

TEST_CASE("optional fields") {
  StructureDocument doc = parse_structure_document(corpus("ex5.hr"));
  CHECK(doc.level == Level::hyperfield);
  doc.level.reset();
  doc.mul.reset();
  doc.commutative = false;
  const std::string text = emit_structure_document(doc);
  CHECK(text.find("\"mul\"") == std::string::npos);
  CHECK(text.find("\"commutative\": false") != std::string::npos);
  CHECK(parse_structure_document(text) == doc);
  CHECK_FALSE(to_structure(doc).has_multiplication());
}

TEST_CASE("unsorted add entries are normalized") {
  const std::string text = replace_once(corpus("K.hr"), "[[1], [0, 1]]", "[[1], [1, 0]]");
  CHECK(same_tables(parse_structure_file(text), testdata::krasner()));
}

TEST_CASE("malformed structure documents report line and column") {
  const std::string ex5 = corpus("ex5.hr");

  SUBCASE("truncated") {
    const ParseError e = parse_failure(ex5.substr(0, ex5.size() / 2));
    CHECK(e.line() > 5);
  }
  SUBCASE("short mul row") {
    const ParseError e = parse_failure(replace_once(ex5, "[0, 1, 2, 3, 4],\n    [0, 2", "[0, 1, 2, 3],\n    [0, 2"));
    CHECK(e.line() == 9);
    CHECK(e.column() == 5);
  }
  SUBCASE("element out of range") {
    const ParseError e = parse_failure(replace_once(ex5, "[[2], [3, 4], [0, 2]", "[[2], [3, 7], [0, 2]"));
    CHECK(e.line() == 17);
    CHECK(e.column() == 15);
  }
  SUBCASE("negative index") {
    const ParseError e = parse_failure(replace_once(ex5, "\"one\": 1", "\"one\": -1"));
    CHECK(e.line() == 5);
    CHECK(e.column() == 10);
  }
  SUBCASE("unknown key") {
    const ParseError e = parse_failure(replace_once(ex5, "\"level\"", "\"levle\""));
    CHECK(e.line() == 6);
  }
  SUBCASE("wrong version") { CHECK(parse_failure(replace_once(ex5, "hyperforge/1", "hyperforge/0")).line() == 2); }
  SUBCASE("unknown level") { CHECK(parse_failure(replace_once(ex5, "\"hyperfield\"", "\"field\"")).line() == 6); }
  SUBCASE("zero equals one") { CHECK(parse_failure(replace_once(ex5, "\"one\": 1", "\"one\": 0")).line() == 5); }
  SUBCASE("missing add") { CHECK_THROWS_AS(parse_structure_document("{\"version\": \"hyperforge/1\"}"), ParseError); }
  SUBCASE("repeated member") { parse_failure(replace_once(ex5, "[0, 1], [3, 4]", "[0, 0], [3, 4]")); }
  SUBCASE("not an object") { CHECK(parse_failure("[1, 2]").line() == 1); }
}

TEST_CASE("geometry files") {
  const IncidenceGeometry fano = parse_geometry(corpus("fano.geom"));
  CHECK(fano.points == 7);
  CHECK(fano.lines.size() == 7);
  CHECK(parse_geometry(emit_geometry(fano)) == fano);
  CHECK(emit_geometry(parse_geometry(emit_geometry(fano))) == emit_geometry(fano));

  const IncidenceGeometry inferred = parse_geometry("0,1,2\n# comment\n\n2 3\n");
  CHECK(inferred.points == 4);
  CHECK(inferred.lines.size() == 2);

  CHECK(geometry_failure("points 3\n0 1\n1 5\n").line() == 3);
  CHECK(geometry_failure("points 3\n0 1\n1 5\n").column() == 3);
  CHECK(geometry_failure("0 1\n1 x\n").column() == 3);
  CHECK(geometry_failure("0 1 1\n").column() == 5);
  CHECK(geometry_failure("0 1\n2\n").line() == 2);
  CHECK(geometry_failure("0 1\n1 0\n").line() == 2);
  CHECK(geometry_failure("0 1\npoints 3\n").line() == 2);
  CHECK_THROWS_AS(parse_geometry("# nothing\n"), ParseError);
}
