#pragma once

#include <optional>
#include <vector>

#include "unilat/numeric.hpp"
#include "unilat/polymatrix.hpp"

namespace unilat {

/// Rank of a rational matrix (Gauss-Jordan, exact).
std::size_t rank(const RatMatrix& m);

/// Solves an overdetermined system given as an augmented matrix [A | b].
///
/// Returns the unique x with A x = b when the system is consistent and A has
/// full column rank, and an empty optional when it is inconsistent. A
/// consistent but rank-deficient system throws AmbiguityError.
std::optional<std::vector<Rat>> solve_overdetermined(const RatMatrix& augmented);

}  // namespace unilat
