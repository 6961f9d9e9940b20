#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "unilat/numeric.hpp"
#include "unilat/unipoly.hpp"

namespace unilat {

/// Dense row-major matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Rectangular matrix of UniPoly entries sharing one variable.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, char var);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  char var() const { return var_; }
  bool is_square() const { return rows_ == cols_; }

  const UniPoly& at(std::size_t r, std::size_t c) const;
  /// Stores p; throws DimensionError if p is nonconstant in another variable.
  void set(std::size_t r, std::size_t c, UniPoly p);

  /// Substitutes var = x entrywise.
  RatMatrix evaluate(const Rat& x) const;
  /// Multiplies row r by c.
  void scale_row(std::size_t r, const Rat& c);

 private:
  std::size_t rows_;
  std::size_t cols_;
  char var_;
  std::vector<UniPoly> entries_;
};

/// Exact determinant by Bareiss elimination over Z[var].
///
/// Row denominators are cleared first and divided back out at the end, so
/// every intermediate is an integer polynomial and each Bareiss division is
/// exact. Throws DimensionError for non-square input.
UniPoly det_fraction_free(const PolyMatrix& m);

/// Exact determinant of a square rational matrix (Bareiss).
Rat det_fraction_free(const RatMatrix& m);

}  // namespace unilat
