#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "unilat/numeric.hpp"

namespace unilat {

/// Truncated formal power series in q with rational coefficients.
///
/// Coefficients are known for exponents 0..order()-1. Binary arithmetic
/// truncates to the smaller order.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(std::size_t order) : coeffs_(order) {}
  explicit QSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t order() const { return coeffs_.size(); }
  const Rat& operator[](std::size_t k) const { return coeffs_.at(k); }
  Rat& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  QSeries truncated(std::size_t order) const;
  /// Leading zeros, i.e. the q-adic valuation (order() if all known are 0).
  std::size_t valuation() const;
  bool has_integer_coeffs() const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const Rat& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rat& c) { return a *= c; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

  QSeries pow(unsigned e) const;
  /// "1 + 240*q + 2160*q^2 + O(q^3)".
  std::string to_string() const;

 private:
  std::vector<Rat> coeffs_;
};

/// sigma_k(n): sum of d^k over positive divisors d of n.
Int divisor_sigma(unsigned long n, unsigned k);

/// E4 or E6 to `order` terms. Throws ArgumentError for other weights or order 0.
QSeries eisenstein(int weight, std::size_t order);

/// Delta = (E4^3 - E6^2) / 1728.
QSeries delta_form(std::size_t order);

/// dim M_k for SL2(Z); 0 for k < 0 or odd k.
int dim_M(int k);

/// Weight-k modular forms spanned by the monomials E4^a E6^b, 4a + 6b = k,
/// ordered by descending a.
struct FormSpace {
  int weight = 0;
  std::vector<std::pair<int, int>> exponents;  // (a, b)
  std::vector<QSeries> basis;
  int dimension = 0;
};

FormSpace form_space(int weight, std::size_t order);

/// m = floor(n/24) + 1, so the minimal norm of an extremal lattice is 2m.
int extremal_m(int rank);

/// Unique weight-n/2 form with a(0) = 1 and a(1) = ... = a(m-1) = 0.
/// Throws ArgumentError unless n is a positive multiple of 8 and order > m.
QSeries extremal_theta(int rank, std::size_t order);

/// Coefficient of q^m in extremal_theta(rank).
Int kissing_number(int rank);

/// True iff every cusp form of weight n/2 + d vanishing to order >= m at q is
/// identically zero, i.e. dim M_{n/2 + d - 12m} = 0.
bool cusp_vanishing_check(int rank, int degree);

}  // namespace unilat
