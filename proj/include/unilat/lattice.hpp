#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "unilat/numeric.hpp"
#include "unilat/qseries.hpp"
#include "unilat/zonal.hpp"

namespace unilat {

/// Lattice given by the Gram matrix of a basis.
///
/// Construction checks symmetry and positive definiteness exactly (every
/// LDL^T pivot > 0); a GramLattice that exists is a valid inner product.
class GramLattice {
 public:
  GramLattice(std::string name, int rank, std::vector<Rat> gram);

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  const Rat& operator()(int i, int j) const {
    return gram_[static_cast<std::size_t>(i * rank_ + j)];
  }
  Rat determinant() const;
  bool is_integral() const;
  /// Integral with even diagonal (then every norm is even).
  bool is_even() const;

  /// Pivots D and unit upper-triangular U with x^T G x = sum_i D_i (x_i + sum_{j>i} U_ij x_j)^2.
  const std::vector<Rat>& ldl_pivots() const { return pivots_; }
  const std::vector<Rat>& ldl_upper() const { return upper_; }

  /// x^T G y for integer coordinate vectors.
  Rat inner(std::span<const long long> x, std::span<const long long> y) const;

 private:
  std::string name_;
  int rank_;
  std::vector<Rat> gram_;
  std::vector<Rat> pivots_;
  std::vector<Rat> upper_;
};

/// E8 from its Cartan matrix.
GramLattice e8();

/// Leech lattice from a basis of the Golay-code construction (coordinates
/// scaled by sqrt 8). Throws InvariantError unless the result is even,
/// unimodular and has no vectors of norm 2.
GramLattice leech();

/// Lattice vectors of one norm in basis coordinates, lexicographically sorted,
/// closed under negation.
struct ShellVectors {
  Rat norm;
  int dim = 0;
  std::vector<std::int32_t> coords;  // size() * dim entries

  std::size_t size() const { return dim == 0 ? 0 : coords.size() / static_cast<std::size_t>(dim); }
  std::span<const std::int32_t> operator[](std::size_t i) const {
    return {coords.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
};

/// Calls visit(coords, exact_norm) for every nonzero vector of norm <= bound
/// (integral Gram only). Pruning is done in floating point with a safety
/// margin; every reported norm is exact. The search is split on the last
/// coordinate across threads, so visit must be thread safe.
void enumerate_short_vectors(const GramLattice& lattice, long long bound,
                             const std::function<void(std::span<const std::int32_t>, long long)>& visit);

/// All vectors of exactly this norm. Throws ArgumentError for norm <= 0 or a
/// non-integral Gram matrix.
ShellVectors enumerate_shell(const GramLattice& lattice, const Rat& norm);

/// Theta series by counting: coefficient of q^k is the number of vectors of
/// norm 2k, for 2k <= max_norm. Even lattices only.
QSeries theta_by_enumeration(const GramLattice& lattice, int max_norm);

/// N_i(x0) = #{x in shell : <x,x0> = +-i}, folded by sign.
struct NProfile {
  std::vector<long long> x0;
  std::vector<Int> counts;  // counts[i] for i = 0..max |<x,x0>|

  /// counts[0] + 2 * sum_{i>=1} counts[i]
  Int folded_total() const;
};

/// Exact N-profile of an integral x0. Asserts Cauchy-Schwarz on every pair.
NProfile n_profile(const ShellVectors& shell, const GramLattice& lattice,
                   std::span<const long long> x0);

/// A rational probe x0 = numerators / denominator in basis coordinates.
struct Probe {
  std::vector<long long> numerators;
  long long denominator = 1;
  std::string label;
};

/// Fixed probes (all-ones vector, first shell vector) followed by `count`
/// seeded random ones with |numerator| <= 97 and 1 <= denominator <= 97.
std::vector<Probe> design_probes(const ShellVectors& shell, int count, std::uint64_t seed);

/// Exact sum of the zonal polynomial over the shell for one probe.
Rat zonal_shell_sum(const ShellVectors& shell, const GramLattice& lattice,
                    const ZonalPoly& p, const Probe& probe);

struct DesignSum {
  std::string probe;
  int degree = 0;
  Rat sum;
};

struct DesignReport {
  bool passed = true;
  std::vector<DesignSum> sums;
};

/// Checks sum_x P_{d,x0}(x) = 0 for every even 2 <= d <= strength over all
/// probes from design_probes(shell, probes, seed).
DesignReport design_sums(const ShellVectors& shell, const GramLattice& lattice, int strength,
                         int probes, std::uint64_t seed);

bool design_check(const ShellVectors& shell, const GramLattice& lattice, int strength, int probes,
                  std::uint64_t seed);

}  // namespace unilat
