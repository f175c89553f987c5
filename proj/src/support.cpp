// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string>

#include "hyperforge/config.hpp"
#include "hyperforge/errors.hpp"
#include "hyperforge/subset.hpp"

namespace hyperforge {

Bounds default_bounds() {
  Bounds b;
  if (const char* env = std::getenv("HYPERFORGE_BOUND"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw PreconditionError("HYPERFORGE_BOUND must be a positive integer, got '" +
                              std::string(env) + "'");
    b.ring_size = static_cast<std::size_t>(v);
  }
  return b;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Element e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace hyperforge
