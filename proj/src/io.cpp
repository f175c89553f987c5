// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperforge/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hyperforge/errors.hpp"

namespace hyperforge {
namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::size_t skip_space(std::string_view t, std::size_t p) {
  while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p]))) ++p;
  return p;
}

std::size_t skip_string(std::string_view t, std::size_t p) {
  for (++p; p < t.size(); ++p) {
    if (t[p] == '\\') {
      ++p;
    } else if (t[p] == '"') {
      return p + 1;
    }
  }
  return p;
}

std::size_t skip_value(std::string_view t, std::size_t p) {
  if (p >= t.size()) return p;
  if (t[p] == '"') return skip_string(t, p);
  if (t[p] == '[' || t[p] == '{') {
    int depth = 0;
    while (p < t.size()) {
      const char c = t[p];
      if (c == '"') {
        p = skip_string(t, p);
        continue;
      }
      if (c == '[' || c == '{') ++depth;
      if (c == ']' || c == '}') {
        if (--depth == 0) return p + 1;
      }
      ++p;
    }
    return p;
  }
  while (p < t.size() && t[p] != ',' && t[p] != ']' && t[p] != '}' &&
         !std::isspace(static_cast<unsigned char>(t[p])))
    ++p;
  return p;
}

// Offset of the value reached from top-level `key` through array indices.
// Falls back to the deepest position found, or 0.
std::size_t locate(std::string_view t, std::string_view key, std::initializer_list<std::size_t> path) {
  std::size_t p = skip_space(t, 0);
  if (p >= t.size() || t[p] != '{') return 0;
  ++p;
  std::size_t found = std::string_view::npos;
  while (p < t.size()) {
    p = skip_space(t, p);
    if (p >= t.size() || t[p] != '"') return 0;
    const std::size_t name_end = skip_string(t, p);
    const std::string_view name = t.substr(p + 1, name_end - p - 2);
    p = skip_space(t, name_end);
    if (p < t.size() && t[p] == ':') p = skip_space(t, p + 1);
    if (name == key) found = p;
    p = skip_space(t, skip_value(t, p));
    if (p < t.size() && t[p] == ',') ++p;
    else break;
  }
  if (found == std::string_view::npos) return 0;
  p = found;
  for (std::size_t index : path) {
    if (p >= t.size() || t[p] != '[') return p;
    std::size_t q = skip_space(t, p + 1);
    for (std::size_t i = 0; i < index; ++i) {
      q = skip_space(t, skip_value(t, q));
      if (q >= t.size() || t[q] != ',') return p;
      q = skip_space(t, q + 1);
    }
    p = q;
  }
  return p;
}

class DocumentReader {
 public:
  explicit DocumentReader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& what, std::string_view key,
                         std::initializer_list<std::size_t> path = {}) const {
    const auto [line, column] = line_column(text_, locate(text_, key, path));
    throw ParseError(what, line, column);
  }

  std::size_t index(const json& v, std::string_view key, std::initializer_list<std::size_t> path,
                    std::size_t limit) const {
    if (!v.is_number_unsigned()) fail("expected a nonnegative integer in '" + std::string(key) + "'", key, path);
    const auto value = v.get<std::uint64_t>();
    if (value >= limit)
      fail("index " + std::to_string(value) + " out of range for carrier of size " + std::to_string(limit),
           key, path);
    return static_cast<std::size_t>(value);
  }

  StructureDocument read() const {
    json root;
    try {
      root = json::parse(text_.begin(), text_.end());
    } catch (const json::parse_error& e) {
      const auto [line, column] = line_column(text_, e.byte == 0 ? 0 : e.byte - 1);
      std::string what = e.what();
      if (const auto cut = what.find("syntax error"); cut != std::string::npos) what = what.substr(cut);
      throw ParseError("malformed document: " + what, line, column);
    }
    if (!root.is_object()) throw ParseError("document must be an object", 1, 1);
    static const std::set<std::string> known = {"version", "size", "zero", "one", "level", "commutative",
                                                "mul", "add"};
    for (const auto& [k, v] : root.items())
      if (!known.contains(k)) fail("unknown key '" + k + "'", k);
    for (const char* k : {"version", "size", "zero", "one", "add"})
      if (!root.contains(k)) throw ParseError(std::string("missing key '") + k + "'", 1, 1);

    StructureDocument doc;
    if (!root["version"].is_string() || root["version"].get<std::string>() != kStructureVersion)
      fail("unsupported version, expected \"" + std::string(kStructureVersion) + "\"", "version");
    doc.version = root["version"].get<std::string>();
    if (!root["size"].is_number_unsigned() || root["size"].get<std::uint64_t>() < 2 ||
        root["size"].get<std::uint64_t>() > std::uint64_t{1} << 16)
      fail("size must be an integer in [2, 65536]", "size");
    doc.size = root["size"].get<std::size_t>();
    const std::size_t n = doc.size;
    doc.zero = static_cast<Element>(index(root["zero"], "zero", {}, n));
    doc.one = static_cast<Element>(index(root["one"], "one", {}, n));
    if (doc.zero == doc.one) fail("zero and one must differ", "one");
    if (root.contains("level")) {
      const json& l = root["level"];
      std::optional<Level> level;
      if (l.is_string()) level = level_from_string(l.get<std::string>());
      if (!level) fail("unknown level", "level");
      doc.level = level;
    }
    if (root.contains("commutative")) {
      if (!root["commutative"].is_boolean()) fail("'commutative' must be true or false", "commutative");
      doc.commutative = root["commutative"].get<bool>();
    }
    if (root.contains("mul") && !root["mul"].is_null()) {
      const json& m = root["mul"];
      if (!m.is_array() || m.size() != n)
        fail("'mul' must have " + std::to_string(n) + " rows", "mul");
      std::vector<std::vector<Element>> rows(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (!m[i].is_array() || m[i].size() != n)
          fail("mul row " + std::to_string(i) + " must have " + std::to_string(n) + " entries", "mul", {i});
        for (std::size_t j = 0; j < n; ++j)
          rows[i].push_back(static_cast<Element>(index(m[i][j], "mul", {i, j}, n)));
      }
      doc.mul = std::move(rows);
    }
    const json& a = root["add"];
    if (!a.is_array() || a.size() != n) fail("'add' must have " + std::to_string(n) + " rows", "add");
    doc.add.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      if (!a[i].is_array() || a[i].size() != n)
        fail("add row " + std::to_string(i) + " must have " + std::to_string(n) + " entries", "add", {i});
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[i][j].is_array()) fail("add entries must be lists", "add", {i, j});
        std::vector<Element> members;
        for (std::size_t k = 0; k < a[i][j].size(); ++k)
          members.push_back(static_cast<Element>(index(a[i][j][k], "add", {i, j, k}, n)));
        std::sort(members.begin(), members.end());
        if (std::adjacent_find(members.begin(), members.end()) != members.end())
          fail("repeated member in add entry", "add", {i, j});
        doc.add[i].push_back(std::move(members));
      }
    }
    return doc;
  }

 private:
  std::string_view text_;
};

void emit_list(std::ostringstream& out, const std::vector<Element>& xs) {
  out << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  out << ']';
}

}  // namespace

StructureDocument parse_structure_document(std::string_view text) { return DocumentReader(text).read(); }

std::string emit_structure_document(const StructureDocument& doc) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"version\": \"" << doc.version << "\",\n";
  out << "  \"size\": " << doc.size << ",\n";
  out << "  \"zero\": " << doc.zero << ",\n";
  out << "  \"one\": " << doc.one << ",\n";
  if (doc.level) out << "  \"level\": \"" << to_string(*doc.level) << "\",\n";
  if (!doc.commutative) out << "  \"commutative\": false,\n";
  if (doc.mul) {
    out << "  \"mul\": [\n";
    for (std::size_t i = 0; i < doc.mul->size(); ++i) {
      out << "    ";
      emit_list(out, (*doc.mul)[i]);
      out << (i + 1 < doc.mul->size() ? ",\n" : "\n");
    }
    out << "  ],\n";
  }
  out << "  \"add\": [\n";
  for (std::size_t i = 0; i < doc.add.size(); ++i) {
    out << "    [";
    for (std::size_t j = 0; j < doc.add[i].size(); ++j) {
      if (j) out << ", ";
      emit_list(out, doc.add[i][j]);
    }
    out << (i + 1 < doc.add.size() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

HyperStructure to_structure(const StructureDocument& doc) {
  std::optional<MulTable> mul;
  if (doc.mul) mul = MulTable::from_rows(*doc.mul);
  return HyperStructure(Carrier(doc.size, doc.zero, doc.one), AddTable::from_lists(doc.add), std::move(mul),
                        doc.commutative);
}

StructureDocument to_document(const HyperStructure& r, std::optional<Level> level) {
  StructureDocument doc;
  const std::size_t n = r.size();
  doc.size = n;
  doc.zero = r.zero();
  doc.one = r.one();
  doc.level = level;
  doc.commutative = r.commutative();
  if (r.has_multiplication()) {
    std::vector<std::vector<Element>> rows(n);
    for (Element i = 0; i < n; ++i) {
      const auto row = r.mul_table().row(i);
      rows[i].assign(row.begin(), row.end());
    }
    doc.mul = std::move(rows);
  }
  doc.add.assign(n, {});
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) doc.add[i].push_back(r.sum(i, j).elements());
  return doc;
}

HyperStructure parse_structure_file(std::string_view text) {
  return to_structure(parse_structure_document(text));
}

std::string emit_structure(const HyperStructure& r, std::optional<Level> level) {
  return emit_structure_document(to_document(r, level));
}

IncidenceGeometry parse_geometry(std::string_view text) {
  std::optional<std::size_t> points;
  std::vector<std::vector<Element>> lines;
  std::vector<std::size_t> line_numbers;
  std::size_t line_no = 0;
  std::size_t max_point = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view row = text.substr(start, end - start);
    if (const auto hash = row.find('#'); hash != std::string_view::npos) row = row.substr(0, hash);
    std::vector<std::pair<std::size_t, std::size_t>> tokens;  // column, length
    for (std::size_t p = 0; p < row.size();) {
      if (std::isspace(static_cast<unsigned char>(row[p])) || row[p] == ',') {
        ++p;
        continue;
      }
      std::size_t q = p;
      while (q < row.size() && !std::isspace(static_cast<unsigned char>(row[q])) && row[q] != ',') ++q;
      tokens.emplace_back(p, q - p);
      p = q;
    }
    auto number = [&](std::size_t t) {
      const std::string_view tok = row.substr(tokens[t].first, tokens[t].second);
      std::size_t v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected a point index, got '" + std::string(tok) + "'", line_no, tokens[t].first + 1);
      return v;
    };
    if (!tokens.empty()) {
      if (row.substr(tokens[0].first, tokens[0].second) == "points") {
        if (points || !lines.empty())
          throw ParseError("'points' header must come first and only once", line_no, tokens[0].first + 1);
        if (tokens.size() != 2) throw ParseError("expected 'points N'", line_no, tokens[0].first + 1);
        points = number(1);
      } else {
        std::vector<Element> line;
        for (std::size_t t = 0; t < tokens.size(); ++t) {
          const std::size_t v = number(t);
          if (points && v >= *points)
            throw ParseError("point " + std::to_string(v) + " out of range", line_no, tokens[t].first + 1);
          if (std::find(line.begin(), line.end(), v) != line.end())
            throw ParseError("repeated point " + std::to_string(v), line_no, tokens[t].first + 1);
          line.push_back(static_cast<Element>(v));
          max_point = std::max(max_point, v);
        }
        if (line.size() < 2) throw ParseError("a line needs at least two points", line_no, tokens[0].first + 1);
        lines.push_back(std::move(line));
        line_numbers.push_back(line_no);
      }
    }
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("geometry has no lines", line_no, 1);
  std::vector<std::vector<Element>> sorted = lines;
  for (auto& l : sorted) std::sort(l.begin(), l.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (sorted[i] == sorted[j])
        throw ParseError("line repeats line " + std::to_string(line_numbers[j]), line_numbers[i], 1);
  return IncidenceGeometry::make(points.value_or(max_point + 1), std::move(lines));
}

std::string emit_geometry(const IncidenceGeometry& g) {
  std::ostringstream out;
  out << "points " << g.points << '\n';
  for (const auto& line : g.lines) {
    for (std::size_t i = 0; i < line.size(); ++i) out << (i ? " " : "") << line[i];
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace hyperforge
