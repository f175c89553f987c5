// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

// Plain-text renderings of results. Every function depends only on its
// arguments, so equal inputs give byte-identical text.

#pragma once

#include <string>
#include <vector>

#include "hyperforge/adele_sandbox.hpp"
#include "hyperforge/classification.hpp"
#include "hyperforge/core.hpp"
#include "hyperforge/geometry.hpp"
#include "hyperforge/homomorphisms.hpp"
#include "hyperforge/ideals.hpp"

namespace hyperforge {

/// "{0,1,3}" style list.
std::string format_elements(const std::vector<Element>& xs);

/// Size, validated level, and the addition table as rows of sets.
std::string structure_report(const HyperStructure& r);

std::string ideals_report(const std::vector<HyperIdeal>& ideals);
std::string spec_report(const std::vector<SpecPoint>& points);
std::string homs_report(const HomEnumeration& homs);
std::string lift_report(const HomWitness& h, const LiftResult& lift);
std::string relation_family_report(const RelationFamily& f, const CommuteResult& commute);
std::string desargues_report(const DesarguesResult& d);
std::string difference_sets_report(std::size_t n, std::size_t k, const std::vector<DifferenceSet>& sets);
std::string dimension2_report(const Dimension2Class& c);
std::string place_ideals_report(const SemiLocalClassSpace& s, const std::vector<PlaceIdeal>& ideals);
std::string place_primes_report(const std::vector<SpecEntry>& primes);

}  // namespace hyperforge
