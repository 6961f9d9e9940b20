#include "doctest.h"
#include "oracles.hpp"
#include "unilat/errors.hpp"
#include "unilat/linsolve.hpp"
#include "unilat/qseries.hpp"

using namespace unilat;

TEST_CASE("Eisenstein series against naive divisor sums") {
  const auto e4 = eisenstein(4, 40);
  const auto e6 = eisenstein(6, 40);
  CHECK(e4[0] == 1);
  CHECK(e6[0] == 1);
  CHECK(e4[1] == 240);
  CHECK(e4[2] == 2160);
  CHECK(e6[1] == -504);
  for (unsigned long n = 1; n < 40; ++n) {
    CHECK(e4[n] == 240 * oracle::naive_sigma(n, 3));
    CHECK(e6[n] == -504 * oracle::naive_sigma(n, 5));
    CHECK(divisor_sigma(n, 7) == oracle::naive_sigma(n, 7));
  }
  CHECK_THROWS_AS(eisenstein(8, 5), ArgumentError);
  CHECK_THROWS_AS(eisenstein(4, 0), ArgumentError);
}

TEST_CASE("Delta") {
  const auto d = delta_form(30);
  CHECK(d[0] == 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == -24);
  CHECK(d[3] == 252);
  CHECK(d[4] == -1472);
  CHECK(d.valuation() == 1);
  CHECK(d.has_integer_coeffs());
  // E4^3 - E6^2 is divisible by 1728 coefficientwise.
  const auto e4 = eisenstein(4, 30);
  const auto e6 = eisenstein(6, 30);
  const auto diff = e4.pow(3) - e6 * e6;
  for (std::size_t k = 0; k < 30; ++k) {
    CHECK(diff[k].get_den() == 1);
    CHECK(diff[k].get_num() % 1728 == 0);
  }
  // E4^2 = E8 = 1 + 480 sum sigma_7(n) q^n.
  const auto e4sq = e4 * e4;
  for (unsigned long n = 1; n < 30; ++n) CHECK(e4sq[n] == 480 * oracle::naive_sigma(n, 7));
}

TEST_CASE("QSeries arithmetic and printing") {
  QSeries a(std::vector<Rat>{Rat(1), Rat(2), Rat(3)});
  QSeries b(std::vector<Rat>{Rat(1), Rat(-1)});
  CHECK((a * b).order() == 2);
  CHECK((a * b)[1] == 1);
  CHECK((a + b).order() == 2);
  CHECK(a.truncated(1).order() == 1);
  CHECK(eisenstein(4, 3).to_string() == "1 + 240*q + 2160*q^2 + O(q^3)");
  CHECK(a.pow(0)[0] == 1);
  CHECK(a.pow(0)[2] == 0);
}

TEST_CASE("dim_M") {
  CHECK(dim_M(0) == 1);
  CHECK(dim_M(2) == 0);
  CHECK(dim_M(4) == 1);
  CHECK(dim_M(12) == 2);
  CHECK(dim_M(14) == 1);
  CHECK(dim_M(24) == 3);
  CHECK(dim_M(26) == 2);
  CHECK(dim_M(-4) == 0);
  CHECK(dim_M(7) == 0);
}

TEST_CASE("dim_M equals the rank of the E4^a E6^b basis") {
  for (int k = 0; k <= 80; k += 2) {
    const int dim = dim_M(k);
    const auto space = form_space(k, static_cast<std::size_t>(dim + 4));
    CHECK(space.dimension == dim);
    CHECK(static_cast<int>(space.basis.size()) == dim);
    RatMatrix m(space.basis.size(), static_cast<std::size_t>(dim + 4));
    for (std::size_t i = 0; i < space.basis.size(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = space.basis[i][j];
    CHECK(static_cast<int>(rank(m)) == dim);
  }
}

TEST_CASE("Extremal theta series") {
  CHECK(extremal_m(8) == 1);
  CHECK(extremal_m(24) == 2);
  CHECK(extremal_m(56) == 3);
  CHECK(extremal_m(72) == 4);
  CHECK(extremal_m(96) == 5);

  CHECK(extremal_theta(8, 12) == eisenstein(4, 12));
  CHECK(extremal_theta(16, 12) == eisenstein(4, 12).pow(2));
  const auto leech = extremal_theta(24, 6);
  CHECK(leech[1] == 0);
  CHECK(leech[2] == 196560);
  CHECK(leech[3] == 16773120);
  CHECK(leech[4] == 398034000);

  CHECK(kissing_number(32) == 146880);
  CHECK(kissing_number(48) == 52416000);
  CHECK(kissing_number(56) == 15590400);
  CHECK(kissing_number(72) == 6218175600);
  CHECK(kissing_number(96) == Int("565866362880"));

  for (int rank : {32, 48, 56, 72, 96}) {
    const int m = extremal_m(rank);
    const auto th = extremal_theta(rank, static_cast<std::size_t>(m + 6));
    CHECK(th[0] == 1);
    for (int k = 1; k < m; ++k) CHECK(th[static_cast<std::size_t>(k)] == 0);
    for (std::size_t k = 0; k < th.order(); ++k) {
      CHECK(th[k].get_den() == 1);
      CHECK(th[k] >= 0);
    }
    CHECK(th[static_cast<std::size_t>(m)] > 0);
  }

  CHECK_THROWS_AS(extremal_theta(10, 5), ArgumentError);
  CHECK_THROWS_AS(extremal_theta(0, 5), ArgumentError);
  CHECK_THROWS_AS(extremal_theta(72, 4), ArgumentError);
}

TEST_CASE("Cusp vanishing degrees") {
  std::vector<int> d96;
  std::vector<int> d56;
  std::vector<int> d72;
  for (int d = 2; d <= 16; d += 2) {
    if (cusp_vanishing_check(96, d)) d96.push_back(d);
    if (cusp_vanishing_check(56, d)) d56.push_back(d);
    if (cusp_vanishing_check(72, d)) d72.push_back(d);
  }
  CHECK(d96 == std::vector<int>{2, 4, 6, 8, 10, 14});
  CHECK(d56 == std::vector<int>{2, 4, 6, 10});
  CHECK(d72 == std::vector<int>{2, 4, 6, 8, 10, 14});
  CHECK(cusp_vanishing_check(24, 10));
  CHECK_FALSE(cusp_vanishing_check(24, 12));
  CHECK(cusp_vanishing_check(8, 6));
  CHECK_FALSE(cusp_vanishing_check(8, 8));
}
