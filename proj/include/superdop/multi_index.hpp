#pragma once

#include <cstddef>
#include <vector>

#include "superdop/koszul.hpp"
#include "superdop/parity.hpp"

namespace superdop {

/// Exponent vector on the even coordinates plus a set of odd slots.
/// Names the monomial x^alpha xi^beta as well as the derivative word
/// d_x^alpha d_xi^beta.
struct MultiIndex {
  std::vector<unsigned> powers;
  OddMask odd = 0;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t p) : powers(p, 0U) {}
  MultiIndex(std::vector<unsigned> alpha, OddMask beta) : powers(std::move(alpha)), odd(beta) {}

  unsigned even_degree() const {
    unsigned d = 0;
    for (unsigned e : powers) d += e;
    return d;
  }
  unsigned odd_degree() const { return superdop::odd_degree(odd); }
  unsigned total_degree() const { return even_degree() + odd_degree(); }
  Parity parity() const { return parity_of(odd_degree()); }
  bool is_unit() const { return odd == 0 && even_degree() == 0; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Graded order: total degree first, then exponents, then odd slots.
struct MultiIndexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    const unsigned da = a.total_degree();
    const unsigned db = b.total_degree();
    if (da != db) return da < db;
    if (a.powers != b.powers) return a.powers > b.powers;
    return a.odd < b.odd;
  }
};

}  // namespace superdop
