// Copyright 2026 The Hyperforge Authors
// SPDX-License-Identifier: Apache-2.0

// Hyperideals, prime spectra, symmetric cones and exact sign evaluation.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperforge/config.hpp"
#include "hyperforge/constructions.hpp"
#include "hyperforge/core.hpp"
#include "hyperforge/ring.hpp"

namespace hyperforge {

/// A subset I with a - b inside I for a, b in I and rI inside I.
struct HyperIdeal {
  Subset members;

  std::size_t size() const { return members.count(); }
  bool contains(Element e) const { return members.contains(e); }
  /// Smaller ideals first, then lexicographic on sorted members.
  friend bool operator<(const HyperIdeal& a, const HyperIdeal& b);
  friend bool operator==(const HyperIdeal& a, const HyperIdeal& b) { return a.members == b.members; }
};

bool is_ideal(const HyperStructure& r, const Subset& s);
bool is_prime_ideal(const HyperStructure& r, const HyperIdeal& i);

/// Smallest ideal containing `seed`.
HyperIdeal ideal_closure(const HyperStructure& r, const Subset& seed);

/// Every ideal, sorted. Principal ideals are generated once per unit orbit
/// and the rest are joins of principal ideals.
std::vector<HyperIdeal> enumerate_ideals(const HyperStructure& r, const Bounds& bounds = default_bounds(),
                                         unsigned jobs = 1);
/// Proper ideals with ab in I forcing a or b in I.
std::vector<HyperIdeal> enumerate_prime_ideals(const HyperStructure& r,
                                               const Bounds& bounds = default_bounds(), unsigned jobs = 1);

struct SpecPoint {
  HyperIdeal prime;
  std::vector<Element> hom;  // into K: 0 on the prime, 1 elsewhere
};

/// Pairs each prime with the hom to K vanishing exactly on it, after
/// checking that the homs found by search are exactly these. Throws
/// InvariantViolation on any mismatch and BoundError if the hom search is
/// cut short.
std::vector<SpecPoint> spec_hom_bijection(const HyperStructure& r, const Bounds& bounds = default_bounds(),
                                          unsigned jobs = 1);

/// Ring elements as a hyperring with singleton sums; class i holds
/// representative[i] of the returned quotient by the trivial subgroup.
QuotientStructure ring_as_hyperring(const FiniteRing& ring, const Bounds& bounds = default_bounds());

bool is_symmetric_cone(const FiniteRing& ring, const Subset& p);

struct SignHom {
  std::vector<Element> map;  // ring element -> S
  Subset cone;               // map^-1(1)
};

/// Homs R -> S from a scan of all subsets of R \ {0} for symmetric cones,
/// cross-checked against a direct hom search. Throws InvariantViolation
/// if the two disagree and BoundError if |R| - 1 exceeds the cone scan bound.
std::vector<SignHom> homs_to_sign(const FiniteRing& ring, const Bounds& bounds = default_bounds(),
                                  unsigned jobs = 1);

/// {x : the eventual cycle of x, x^2, x^3, ... lies in J}. Throws
/// PreconditionError if J is not an ideal.
Subset infinity_radical(const FiniteRing& ring, const Subset& j);
Subset infinity_radical(const HyperStructure& r, const Subset& j);

using BigInt = boost::multiprecision::cpp_int;
/// Integer polynomial, constant term first.
using IntPolynomial = std::vector<BigInt>;

IntPolynomial make_polynomial(std::initializer_list<long long> coefficients);
IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);

/// Reduced fraction with positive denominator.
class ExactRational {
 public:
  ExactRational(BigInt numerator, BigInt denominator = 1);
  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }
  std::string to_string() const;
  /// "a" or "a/b".
  static ExactRational parse(const std::string& text);
  friend bool operator==(const ExactRational&, const ExactRational&) = default;

 private:
  BigInt num_, den_;
};

/// Sign of P(lambda) as an element of S.
Element sign_at(const IntPolynomial& p, const ExactRational& lambda);

enum class Side { plus, minus };

/// Sign of P just right (plus) or left (minus) of lambda.
Element sign_at_pm(const IntPolynomial& p, const ExactRational& lambda, Side side);

/// Sign of P near +infinity (plus) or -infinity (minus).
Element sign_at_infinity(const IntPolynomial& p, Side side);

/// Product in S.
Element sign_mul(Element a, Element b);

}  // namespace hyperforge
