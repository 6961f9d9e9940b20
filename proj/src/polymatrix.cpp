#include "unilat/polymatrix.hpp"

#include <utility>

#include "unilat/errors.hpp"

namespace unilat {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, char var)
    : rows_(rows), cols_(cols), var_(var), entries_(rows * cols, UniPoly(var)) {
  if (rows == 0 || cols == 0) throw DimensionError("PolyMatrix needs positive dimensions");
}

const UniPoly& PolyMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("PolyMatrix index out of range");
  return entries_[r * cols_ + c];
}

void PolyMatrix::set(std::size_t r, std::size_t c, UniPoly p) {
  if (r >= rows_ || c >= cols_) throw DimensionError("PolyMatrix index out of range");
  if (p.degree() > 0 && p.var() != var_) {
    throw DimensionError(std::string("entry in variable '") + p.var() +
                         "' stored in a matrix over '" + var_ + "'");
  }
  entries_[r * cols_ + c] = p.with_var(var_);
}

RatMatrix PolyMatrix::evaluate(const Rat& x) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = entries_[r * cols_ + c](x);
  return out;
}

void PolyMatrix::scale_row(std::size_t r, const Rat& c) {
  for (std::size_t j = 0; j < cols_; ++j) entries_[r * cols_ + j] *= c;
}

namespace {

// Generic Bareiss over an integral domain with exact division.
template <class T, class IsZero, class Div>
T bareiss(std::vector<std::vector<T>> a, T one, IsZero is_zero, Div exact_div) {
  const std::size_t n = a.size();
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a[k][k])) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a[p][k])) ++p;
      if (p == n) return T{} * T{};
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = T{};
    }
    prev = a[k][k];
  }
  T det = a[n - 1][n - 1];
  return negate ? T{} - det : det;
}

}  // namespace

UniPoly det_fraction_free(const PolyMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const char var = m.var();

  std::vector<std::vector<UniPoly>> a(n, std::vector<UniPoly>(n, UniPoly(var)));
  Rat cleared = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Int den = 1;
    for (std::size_t c = 0; c < n; ++c)
      for (const auto& x : m.at(r, c).coeffs()) den = lcm(den, x.get_den());
    cleared *= Rat(den);
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m.at(r, c) * Rat(den);
  }

  UniPoly det = bareiss<UniPoly>(
      std::move(a), UniPoly::constant(Rat(1), var),
      [](const UniPoly& p) { return p.is_zero(); },
      [](const UniPoly& p, const UniPoly& d) {
        auto q = exact_divide(p, d);
        if (!q) throw InvariantError("Bareiss step was not an exact division");
        return *q;
      });
  return det.with_var(var) * Rat(1 / cleared);
}

Rat det_fraction_free(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Rat cleared = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Int den = 1;
    for (std::size_t c = 0; c < n; ++c) den = lcm(den, m(r, c).get_den());
    cleared *= Rat(den);
    for (std::size_t c = 0; c < n; ++c) {
      Rat v = m(r, c) * Rat(den);
      a[r][c] = v.get_num();
    }
  }
  Int det = bareiss<Int>(
      std::move(a), Int(1), [](const Int& z) { return z == 0; },
      [](const Int& p, const Int& d) {
        Int q;
        mpz_divexact(q.get_mpz_t(), p.get_mpz_t(), d.get_mpz_t());
        return q;
      });
  return Rat(det) / cleared;
}

}  // namespace unilat
