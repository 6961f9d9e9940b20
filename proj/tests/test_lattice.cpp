#include <bit>
#include <map>

#include "doctest.h"
#include "unilat/errors.hpp"
#include "unilat/golay.hpp"
#include "unilat/lattice.hpp"
#include "unilat/qseries.hpp"
#include "unilat/zonal.hpp"

using namespace unilat;

namespace {

std::vector<long long> widen(std::span<const std::int32_t> v) { return {v.begin(), v.end()}; }

// Direct evaluation of the zonal polynomial at every shell vector.
Rat direct_zonal_sum(const ShellVectors& shell, const GramLattice& l, const ZonalPoly& p,
                     const Probe& probe) {
  const Rat den(to_int(probe.denominator));
  const Rat s = l.inner(probe.numerators, probe.numerators) / (den * den);
  Rat total = 0;
  for (std::size_t k = 0; k < shell.size(); ++k) {
    const auto x = widen(shell[k]);
    total += p(l.inner(x, probe.numerators) / den, shell.norm, s);
  }
  return total;
}

}  // namespace

TEST_CASE("extended Golay code") {
  const auto code = extended_golay_code();
  CHECK(code.length == 24);
  CHECK(code.dimension() == 12);
  CHECK(code.minimum_weight() == 8);
  std::map<int, int> weights;
  for (auto w : code.codewords()) ++weights[std::popcount(w)];
  CHECK(weights == std::map<int, int>{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}});
}

TEST_CASE("E8 and Leech invariants") {
  const auto e = e8();
  CHECK(e.rank() == 8);
  CHECK(e.determinant() == 1);
  CHECK(e.is_even());
  const auto& l = leech();
  CHECK(l.rank() == 24);
  CHECK(l.determinant() == 1);
  CHECK(l.is_even());
  CHECK(enumerate_shell(l, Rat(2)).size() == 0);
}

TEST_CASE("GramLattice rejects bad input") {
  CHECK_THROWS_AS(GramLattice("asym", 2, {Rat(2), Rat(1), Rat(0), Rat(2)}), ArgumentError);
  CHECK_THROWS_AS(GramLattice("indef", 2, {Rat(1), Rat(2), Rat(2), Rat(1)}), ArgumentError);
  CHECK_THROWS_AS(GramLattice("size", 2, {Rat(1)}), DimensionError);
  GramLattice half("half", 1, {make_rat(1, 2)});
  CHECK_FALSE(half.is_integral());
  CHECK_THROWS_AS(enumerate_shell(half, Rat(2)), ArgumentError);
  CHECK_THROWS_AS(enumerate_shell(e8(), Rat(0)), ArgumentError);
  GramLattice odd("Z2", 2, {Rat(1), Rat(0), Rat(0), Rat(1)});
  CHECK(odd.is_integral());
  CHECK_FALSE(odd.is_even());
  CHECK_THROWS_AS(theta_by_enumeration(odd, 4), ArgumentError);
  CHECK(enumerate_shell(odd, Rat(1)).size() == 4);
  CHECK(enumerate_shell(odd, Rat(5)).size() == 8);
}

TEST_CASE("E8 shells") {
  const auto e = e8();
  const auto s2 = enumerate_shell(e, Rat(2));
  CHECK(s2.size() == 240);
  CHECK(enumerate_shell(e, Rat(3)).size() == 0);
  CHECK(enumerate_shell(e, Rat(4)).size() == 2160);
  for (std::size_t k = 0; k < s2.size(); ++k) {
    const auto x = widen(s2[k]);
    CHECK(e.inner(x, x) == 2);
    if (k + 1 < s2.size()) CHECK(std::lexicographical_compare(s2[k].begin(), s2[k].end(),
                                                               s2[k + 1].begin(), s2[k + 1].end()));
  }
  // Negation closed.
  for (std::size_t k = 0; k < s2.size(); ++k) {
    std::vector<std::int32_t> neg(s2[k].begin(), s2[k].end());
    for (auto& c : neg) c = -c;
    CHECK(std::equal(neg.begin(), neg.end(), s2[s2.size() - 1 - k].begin()));
  }
}

TEST_CASE("E8 theta series by enumeration equals E4") {
  const auto th = theta_by_enumeration(e8(), 10);
  CHECK(th == eisenstein(4, 6));
}

TEST_CASE("Leech theta series by enumeration" * doctest::timeout(120)) {
  const auto th = theta_by_enumeration(leech(), 6);
  CHECK(th == extremal_theta(24, 4));
  CHECK(th[2] == 196560);
  CHECK(th[3] == 16773120);
}

TEST_CASE("N-profiles") {
  const auto e = e8();
  const auto s2 = enumerate_shell(e, Rat(2));
  const auto x0 = widen(s2[0]);
  const auto p = n_profile(s2, e, x0);
  REQUIRE(p.counts.size() == 3);
  CHECK(p.counts[0] == 126);
  CHECK(p.counts[1] == 56);
  CHECK(p.counts[2] == 1);
  CHECK(p.folded_total() == 240);

  const auto& l = leech();
  const auto s4 = enumerate_shell(l, Rat(4));
  CHECK(s4.size() == 196560);
  const auto pl = n_profile(s4, l, widen(s4[0]));
  CHECK(pl.folded_total() == 196560);
  CHECK(pl.counts[4] == 1);
  CHECK(pl.counts[3] == 0);
}

TEST_CASE("design sums on E8") {
  const auto e = e8();
  const auto shell = enumerate_shell(e, Rat(2));
  const auto probes = design_probes(shell, 5, 1729);
  CHECK(probes.size() == 7);
  for (const auto& probe : probes)
    for (int d = 2; d <= 8; d += 2) {
      const auto p = zonal_poly(8, d);
      const Rat fast = zonal_shell_sum(shell, e, p, probe);
      CHECK(fast == direct_zonal_sum(shell, e, p, probe));
      if (d <= 6) CHECK(fast == 0);
    }
  CHECK(design_check(shell, e, 7, 5, 1729));
  const auto rep = design_sums(shell, e, 8, 5, 1729);
  CHECK_FALSE(rep.passed);
  bool nonzero_at_8 = false;
  for (const auto& s : rep.sums)
    if (s.degree == 8 && s.sum != 0) nonzero_at_8 = true;
  CHECK(nonzero_at_8);
}

TEST_CASE("design sums on the Leech shell") {
  const auto& l = leech();
  const auto shell = enumerate_shell(l, Rat(4));
  CHECK(design_check(shell, l, 11, 5, 1729));
  const auto rep = design_sums(shell, l, 12, 2, 7);
  CHECK_FALSE(rep.passed);
}

TEST_CASE("probes are deterministic") {
  const auto shell = enumerate_shell(e8(), Rat(2));
  const auto a = design_probes(shell, 6, 42);
  const auto b = design_probes(shell, 6, 42);
  const auto c = design_probes(shell, 6, 43);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].numerators == b[i].numerators);
    CHECK(a[i].denominator == b[i].denominator);
    CHECK(a[i].label == b[i].label);
  }
  CHECK(a.back().numerators != c.back().numerators);
  for (const auto& p : a) {
    CHECK(p.denominator >= 1);
    CHECK(p.denominator <= 97);
  }
}
