#pragma once

#include <bit>
#include <cstdint>

namespace superdop {

/// Set of odd generator slots, bit a standing for xi^{a+1}.
using OddMask = std::uint32_t;

inline constexpr unsigned kMaxOdd = 31;

/// Number of transpositions needed to bring the concatenated word
/// (lhs in increasing order)(rhs in increasing order) into increasing
/// order: the count of pairs (a in lhs, b in rhs) with a > b.
///
/// Every Koszul sign in the library is derived from this count.
constexpr unsigned transposition_count(OddMask lhs, OddMask rhs) {
  unsigned count = 0;
  while (rhs != 0) {
    const unsigned b = static_cast<unsigned>(std::countr_zero(rhs));
    rhs &= rhs - 1;
    const OddMask above = (b + 1 >= 32) ? 0U : (lhs >> (b + 1));
    count += static_cast<unsigned>(std::popcount(above));
  }
  return count;
}

/// Sign of the product xi^lhs * xi^rhs after normal ordering; 0 when the
/// supports overlap (xi^a xi^a = 0).
constexpr int reorder_sign(OddMask lhs, OddMask rhs) {
  if ((lhs & rhs) != 0) return 0;
  return (transposition_count(lhs, rhs) & 1U) ? -1 : 1;
}

constexpr unsigned odd_degree(OddMask m) { return static_cast<unsigned>(std::popcount(m)); }

constexpr OddMask odd_bit(unsigned slot) { return OddMask{1} << slot; }

}  // namespace superdop
