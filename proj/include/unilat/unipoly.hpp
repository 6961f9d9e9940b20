#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unilat/numeric.hpp"

namespace unilat {

/// Dense univariate polynomial over Q, lowest degree first.
///
/// The zero polynomial has an empty coefficient list; otherwise the last
/// coefficient is nonzero. The variable label only matters for printing and
/// for refusing to combine polynomials in different variables.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(char var) : var_(var) {}
  UniPoly(std::vector<Rat> coeffs, char var);

  static UniPoly constant(const Rat& c, char var);
  static UniPoly monomial(const Rat& c, unsigned degree, char var);
  /// The polynomial `var`.
  static UniPoly identity(char var) { return monomial(Rat(1), 1, var); }
  /// Parses integer coefficients given highest degree first.
  static UniPoly from_ints_desc(std::initializer_list<long long> desc, char var);

  char var() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  /// Coefficient of var^i; zero past the degree.
  Rat coeff(std::size_t i) const;
  /// Leading coefficient. Zero polynomial yields 0.
  Rat leading() const;

  Rat operator()(const Rat& x) const;
  UniPoly derivative() const;
  UniPoly with_var(char var) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Rat& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
  friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }

  /// Coefficientwise equality; labels are ignored for constants.
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  /// e.g. "168*t^4 - 2800*t^3 + 17745*t^2 - 50635*t + 54834".
  std::string to_string() const;

 private:
  void trim();
  char check_var(const UniPoly& rhs) const;

  std::vector<Rat> coeffs_;
  char var_ = 't';
};

/// Polynomial division over Q: returns (quotient, remainder).
std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& d);

/// Quotient if d divides p exactly, empty otherwise. Throws UndefinedError
/// for d = 0.
std::optional<UniPoly> exact_divide(const UniPoly& p, const UniPoly& d);

/// (c, q) with p = c*q, q integral, coprime coefficients, positive leading
/// coefficient. Throws UndefinedError for p = 0.
std::pair<Rat, UniPoly> content_and_primitive(const UniPoly& p);

/// Monic gcd (zero when both inputs are zero).
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// p divided by gcd(p, p'): same distinct roots, all simple.
UniPoly square_free_part(const UniPoly& p);

/// Largest k with var^k | p. p must be nonzero.
unsigned zero_root_multiplicity(const UniPoly& p);

}  // namespace unilat
