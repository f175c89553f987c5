// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

// Text formats: `.hr` structure documents (JSON layout) and `.geom`
// geometries (one line of the geometry per row).

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperforge/core.hpp"
#include "hyperforge/geometry.hpp"

namespace hyperforge {

inline constexpr std::string_view kStructureVersion = "hyperforge/1";

/// Field-by-field image of a `.hr` file.
struct StructureDocument {
  std::string version{kStructureVersion};
  std::size_t size = 0;
  Element zero = 0;
  Element one = 1;
  /// Level the file claims to satisfy; `validate` checks it when no level is given.
  std::optional<Level> level;
  bool commutative = true;
  std::optional<std::vector<std::vector<Element>>> mul;
  std::vector<std::vector<std::vector<Element>>> add;  // members sorted

  friend bool operator==(const StructureDocument&, const StructureDocument&) = default;
};

/// Parses and shape-checks a document. Throws ParseError with the line and
/// column of the offending token.
StructureDocument parse_structure_document(std::string_view text);

/// Canonical layout: fixed key order, one table row per line, trailing
/// newline. emit(parse(emit(d))) == emit(d).
std::string emit_structure_document(const StructureDocument& doc);

/// The raw structure (validation is separate).
HyperStructure to_structure(const StructureDocument& doc);
StructureDocument to_document(const HyperStructure& r, std::optional<Level> level = std::nullopt);

/// parse_structure_document followed by to_structure.
HyperStructure parse_structure_file(std::string_view text);
std::string emit_structure(const HyperStructure& r, std::optional<Level> level = std::nullopt);

/// `points N` header (optional; defaults to max point + 1), then one line
/// per row as whitespace- or comma-separated point indices. `#` starts a
/// comment.
IncidenceGeometry parse_geometry(std::string_view text);
std::string emit_geometry(const IncidenceGeometry& g);

/// Whole file as bytes. Throws Error when it cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace hyperforge
