#pragma once

#include <cstdint>
#include <vector>

namespace unilat {

/// Binary linear code with codewords packed into the low bits of a uint32.
struct BinaryCode {
  int length = 0;
  std::vector<std::uint32_t> generator;  // rows

  /// GF(2) rank of the generator rows.
  int dimension() const;
  /// All 2^dimension codewords (generator assumed independent).
  std::vector<std::uint32_t> codewords() const;
  /// Minimum Hamming weight over nonzero codewords.
  int minimum_weight() const;
};

/// Extended binary Golay code [24, 12, 8]: cyclic shifts of the generator
/// polynomial x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1 of the length-23
/// quadratic-residue code, extended by an overall parity bit. Verified
/// (length, dimension, minimum weight) before it is returned.
BinaryCode extended_golay_code();

}  // namespace unilat
