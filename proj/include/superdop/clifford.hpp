#pragma once

#include <optional>
#include <vector>

#include "superdop/diff_op.hpp"

namespace superdop {

inline constexpr unsigned kMaxFockQ = 10;

/// Subsets of the q odd slots as masks, ordered by size and then
/// lexicographically on the sorted elements.
std::vector<OddMask> fock_basis(unsigned q);

/// Square 2^q x 2^q matrix over Q acting on the Fock space, entry (r, c)
/// the coefficient of basis vector r in the image of basis vector c.
class FockMatrix {
 public:
  explicit FockMatrix(unsigned q);
  static FockMatrix identity(unsigned q);

  unsigned q() const { return q_; }
  std::size_t size() const { return n_; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  bool is_zero() const;
  /// Parity if every nonzero entry shifts the subset size by the same parity.
  std::optional<Parity> parity() const;

  FockMatrix& operator+=(const FockMatrix& other);
  FockMatrix& operator-=(const FockMatrix& other);
  FockMatrix& operator*=(const Rational& c);
  friend FockMatrix operator+(FockMatrix a, const FockMatrix& b) { return a += b; }
  friend FockMatrix operator-(FockMatrix a, const FockMatrix& b) { return a -= b; }
  friend FockMatrix operator*(const Rational& c, FockMatrix a) { return a *= c; }
  friend FockMatrix operator*(const FockMatrix& a, const FockMatrix& b);
  friend bool operator==(const FockMatrix&, const FockMatrix&) = default;

 private:
  unsigned q_;
  std::size_t n_;
  std::vector<Rational> data_;
};

/// AB - (-1)^{|A||B|} BA, bilinear over parity parts.
FockMatrix scommutator(const FockMatrix& a, const FockMatrix& b);

/// Matrix of D on the basis xi^S; requires p = 0 and q <= kMaxFockQ.
FockMatrix rep(const SuperDiffOp& d);

/// Rank over Q of the images of the 4^q words xi^S d_xi^T.
std::size_t endomorphism_rank(unsigned q);
bool spans_full_endomorphisms(unsigned q);

/// Algebra map m_{xi^i} <-> d_{xi^i}, applied to each word and
/// renormalized. Requires p = 0.
SuperDiffOp swap_automorphism(const SuperDiffOp& d);

}  // namespace superdop
