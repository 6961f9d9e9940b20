#pragma once

#include <vector>

#include "unilat/numeric.hpp"
#include "unilat/unipoly.hpp"

namespace unilat {

/// A rational number or one of the two infinities.
struct ExtendedRat {
  enum class Kind { neg_infinity, finite, pos_infinity };

  Kind kind = Kind::finite;
  Rat value;

  static ExtendedRat neg_inf() { return {Kind::neg_infinity, Rat(0)}; }
  static ExtendedRat pos_inf() { return {Kind::pos_infinity, Rat(0)}; }
  static ExtendedRat at(const Rat& v) { return {Kind::finite, v}; }

  bool is_finite() const { return kind == Kind::finite; }
};

bool operator<(const ExtendedRat& a, const ExtendedRat& b);

/// Rational roots of p, ascending, without multiplicity. Candidates come from
/// the rational-root theorem on the primitive part and each one is confirmed
/// by exact evaluation. Throws UndefinedError for p = 0.
std::vector<Rat> rational_roots(const UniPoly& p);

/// Every rational-root-theorem candidate (both signs) for nonzero p, after
/// removing the factor var^k. Exposed for property tests.
std::vector<Rat> rational_root_candidates(const UniPoly& p);

/// Sturm sequence of p (p, p', -rem, ...), each member scaled by a positive
/// constant to a primitive integer polynomial.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Throws UndefinedError for p = 0 and ArgumentError unless lo < hi.
int sturm_count(const UniPoly& p, const ExtendedRat& lo, const ExtendedRat& hi);

}  // namespace unilat
