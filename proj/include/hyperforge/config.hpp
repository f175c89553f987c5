// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

namespace hyperforge {

/// Size limits for the exhaustive algorithms. All defaults keep the full
/// test suite at desk-scale runtimes on a single core.
struct Bounds {
  std::size_t ring_size = 4096;          // finite rings built by constructions
  std::size_t carrier_size = 2048;       // materialized hyperstructures
  std::size_t exhaustive_validation = 256;  // quotients validated axiom by axiom
  std::size_t ideal_subset_scan = 20;    // raw 2^n subset scans
  std::size_t cone_subset_scan = 16;     // symmetric cone scans
  std::size_t k_extension_size = 8;      // enumerate_k_extensions
  std::size_t s_extension_size = 9;      // enumerate_s_extensions
  std::size_t sandbox_ring_size = std::size_t{1} << 20;
  std::size_t difference_set_modulus = 400;
};

/// Defaults, with the generic ring bound taken from HYPERFORGE_BOUND when set.
Bounds default_bounds();

}  // namespace hyperforge
