#include "unilat/golay.hpp"

#include <bit>

#include "unilat/errors.hpp"

namespace unilat {

int BinaryCode::dimension() const {
  std::vector<std::uint32_t> rows = generator;
  int rank = 0;
  for (int bit = 0; bit < length; ++bit) {
    const std::uint32_t mask = 1U << bit;
    auto pivot = rows.begin() + rank;
    while (pivot != rows.end() && !(*pivot & mask)) ++pivot;
    if (pivot == rows.end()) continue;
    std::swap(*pivot, rows[static_cast<std::size_t>(rank)]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != static_cast<std::size_t>(rank) && (rows[i] & mask)) rows[i] ^= rows[static_cast<std::size_t>(rank)];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::uint32_t> BinaryCode::codewords() const {
  const std::size_t k = generator.size();
  std::vector<std::uint32_t> words(std::size_t{1} << k);
  for (std::size_t m = 1; m < words.size(); ++m) {
    // Gray-code walk: each word differs from the previous by one generator.
    const std::size_t g = m ^ (m >> 1);
    const std::size_t prev = (m - 1) ^ ((m - 1) >> 1);
    const int flipped = std::countr_zero(g ^ prev);
    words[g] = words[prev] ^ generator[static_cast<std::size_t>(flipped)];
  }
  return words;
}

int BinaryCode::minimum_weight() const {
  int best = length + 1;
  for (std::uint32_t w : codewords()) {
    if (w != 0) best = std::min(best, std::popcount(w));
  }
  return best;
}

BinaryCode extended_golay_code() {
  constexpr std::uint32_t kGenerator = (1U << 0) | (1U << 2) | (1U << 4) | (1U << 5) |
                                       (1U << 6) | (1U << 10) | (1U << 11);
  BinaryCode code;
  code.length = 24;
  for (int shift = 0; shift < 12; ++shift) {
    std::uint32_t row = kGenerator << shift;
    if (std::popcount(row) % 2 != 0) row |= 1U << 23;
    code.generator.push_back(row);
  }
  if (code.dimension() != 12) throw InvariantError("Golay code: dimension is not 12");
  if (code.minimum_weight() != 8) throw InvariantError("Golay code: minimum weight is not 8");
  return code;
}

}  // namespace unilat
