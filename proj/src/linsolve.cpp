#include "unilat/linsolve.hpp"

#include <utility>

#include "unilat/errors.hpp"

namespace unilat {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t col_limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < col_limit && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rat inv = 1 / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rat f = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  RatMatrix copy = m;
  return rref(copy, copy.cols()).size();
}

std::optional<std::vector<Rat>> solve_overdetermined(const RatMatrix& augmented) {
  if (augmented.cols() < 2) throw DimensionError("augmented matrix needs a right-hand side");
  const std::size_t unknowns = augmented.cols() - 1;
  RatMatrix m = augmented;
  auto pivots = rref(m, unknowns);
  // A nonzero RHS in a row with no pivot means 0 = b != 0.
  for (std::size_t i = pivots.size(); i < m.rows(); ++i) {
    if (m(i, unknowns) != 0) return std::nullopt;
  }
  if (pivots.size() < unknowns) {
    throw AmbiguityError("consistent system is rank deficient (" +
                         std::to_string(pivots.size()) + " < " +
                         std::to_string(unknowns) + " unknowns)");
  }
  std::vector<Rat> x(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) x[pivots[i]] = m(i, unknowns);
  return x;
}

}  // namespace unilat
