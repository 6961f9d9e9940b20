#pragma once

#include <utility>
#include <vector>

#include "unilat/numeric.hpp"
#include "unilat/unipoly.hpp"

namespace unilat {

/// Zonal polynomial in the invariants u = <x,x0>, r = <x,x>, s = <x0,x0>:
///
///   P(u, r, s) = sum_j coeffs[j] * u^(degree - 2j) * (r*s)^j
///
/// Built by zonal_poly() it is harmonic in x with coeffs[0] = 1. Other
/// coefficient lists are allowed so non-harmonic inputs can be tested.
struct ZonalPoly {
  int dimension = 0;
  int degree = 0;
  std::vector<Rat> coeffs;

  /// Value at concrete invariants.
  Rat operator()(const Rat& u, const Rat& r, const Rat& s) const;
};

/// The harmonic zonal polynomial of even degree d in dimension n, monic in u.
/// Throws ArgumentError for odd d, d < 2 or n < 2.
ZonalPoly zonal_poly(int n, int d);

/// One term c * u^a * r^b * s^e of a polynomial in the invariants.
struct InvariantTerm {
  Rat coeff;
  int u_exp = 0;
  int r_exp = 0;
  int s_exp = 0;
};

/// Laplacian in x of p, as a sum of invariant monomials (like terms merged,
/// zeros dropped).
std::vector<InvariantTerm> laplacian(const ZonalPoly& p);

bool laplacian_is_zero(const ZonalPoly& p);

/// Average of <x,x0>^(2k) over the unit sphere in R^n for a unit x0:
/// (2k-1)!! / (n (n+2) ... (n+2k-2)).
Rat sphere_moment(int n, int k);

/// How the norm s = <x0,x0> is written in terms of the polynomial variable:
/// s = scale * var.
struct NormVariable {
  char name = 's';
  Rat scale = 1;

  static NormVariable s() { return {'s', Rat(1)}; }
  /// s = 2t.
  static NormVariable t() { return {'t', Rat(2)}; }
};

/// sum_j coeff_j(var) * p_{2 * power_j}, where p_{2l} = sum over the shell of
/// <x,x0>^(2l) and p_0 is the shell size.
struct PowerSumForm {
  std::vector<std::pair<int, UniPoly>> terms;  // (l, coefficient of p_{2l})

  /// Coefficient of p_{2l}; the zero polynomial if absent.
  UniPoly coeff(int l, char var) const;
};

/// Sum of p over a shell on which r is constant: substitutes r = shell_norm
/// and s = var.scale * var.
PowerSumForm shell_sum_form(const ZonalPoly& p, const Rat& shell_norm, const NormVariable& var);

}  // namespace unilat
