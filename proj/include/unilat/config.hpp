#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unilat/numeric.hpp"
#include "unilat/polymatrix.hpp"
#include "unilat/unipoly.hpp"
#include "unilat/zonal.hpp"

namespace unilat {

/// Source of the non-cardinality rows of a configuration system.
enum class Formulation {
  moment,  // sum <x,x0>^(2k) equals the sphere average (design property)
  zonal,   // sum P_{d,x0}(x) = 0 (vanishing weighted theta series)
};

std::string to_string(Formulation f);
Formulation parse_formulation(const std::string& name);

/// Setup for one rank: x0 is a minimal representative of a class, the
/// unknowns are N_0..N_B counted over the shell of norm 2m.
struct ConfigProblem {
  int rank = 0;
  int m = 0;
  int min_norm = 0;    // 2m
  int ip_bound = 0;    // B: |<x0,x>| <= B on the shell
  Int shell_count;     // a(2m, L)
  int design_strength = 0;
  std::vector<int> degree_set;  // zonal degrees, all passing cusp_vanishing_check
  NormVariable var;             // how <x0,x0> is written
  Formulation default_formulation = Formulation::zonal;
  bool oracle_analogue = false;  // rank 8/24 systems for an in-shell x0
};

/// Extremal configuration problem for rank 32, 48, 56, 72 or 96.
ConfigProblem make_problem(int rank);

/// Validation system for E8 (rank 8) or Leech (rank 24) with x0 taken from
/// the minimal shell itself, so B = 2m by Cauchy-Schwarz and var = s.
ConfigProblem make_oracle_problem(int rank);

/// Strength t of the spherical design formed by each shell of an extremal
/// lattice of this rank: 11, 7 or 3 for rank = 0, 8, 16 mod 24.
int design_strength_for(int rank);

/// The first `count` even degrees d >= 2 with cusp_vanishing_check true.
std::vector<int> vanishing_degrees(int rank, std::size_t count);

enum class RowKind { cardinality, moment, zonal };

struct RowTag {
  RowKind kind = RowKind::cardinality;
  int index = 0;  // k for moment rows, d for zonal rows
  std::string label() const;
};

/// Square extended matrix [A | b]; columns N_0..N_B then the right-hand side.
struct LinearSystem {
  ConfigProblem problem;
  Formulation formulation = Formulation::zonal;
  PolyMatrix extended;
  std::vector<RowTag> rows;
};

/// Rows: cardinality first, then moments k = 1..B+1 or the degree set in
/// ascending order. The moment formulation needs design strength >= 2(B+1)
/// and throws ArgumentError otherwise.
LinearSystem build_system(const ConfigProblem& problem, Formulation formulation);
LinearSystem build_system(const ConfigProblem& problem);

/// Polynomial factors the determinant is stated to have (empty for ranks
/// without a published determinant). Repeated factors appear as powers.
std::vector<UniPoly> stated_factors(int rank);

/// Published constant factor and overall sign, where one exists.
struct PublishedConstant {
  Int value;  // signed
};
std::optional<PublishedConstant> published_constant(int rank);

enum class Conclusion { generated_by_minimal_vectors, inconclusive };
std::string to_string(Conclusion c);

struct FactorCheck {
  UniPoly factor;
  bool divides = false;
};

struct Verdict {
  int rank = 0;
  Formulation formulation = Formulation::zonal;
  UniPoly determinant;
  Rat content;
  UniPoly primitive;
  std::vector<FactorCheck> factors;
  bool factors_ok = true;
  std::optional<UniPoly> cofactor;  // determinant / all stated factors
  std::vector<Rat> rational_roots;  // in the norm variable
  int positive_real_root_count = 0;  // distinct, in (0, inf)
  std::vector<Rat> admissible_norms; // <x0,x0> values from nonnegative roots
  std::vector<Rat> blocking_roots;   // roots a nontrivial class could realize
  Conclusion conclusion = Conclusion::inconclusive;
  std::vector<std::string> notes;
};

/// Determinant, stated-factor divisibility, root analysis and conclusion.
Verdict analyze(const LinearSystem& sys);

/// Solves the system with the norm variable set to `value`. Empty when the
/// system is inconsistent there; AmbiguityError when underdetermined.
std::optional<std::vector<Rat>> solve_at(const LinearSystem& sys, const Rat& value);

}  // namespace unilat
